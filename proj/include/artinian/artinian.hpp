#pragma once

#include "field.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "algebra.hpp"
#include "module.hpp"
#include "resolution.hpp"
#include "hom.hpp"
#include "canonical.hpp"
#include "eliahou_kervaire.hpp"
#include "parser.hpp"
#include "module_spec.hpp"
#include "report.hpp"
