// plateau.hpp -- umbrella header.
#pragma once

#include "classifier.hpp"
#include "code.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "json_io.hpp"
#include "minimality.hpp"
#include "search.hpp"
#include "theory.hpp"
#include "walsh.hpp"
