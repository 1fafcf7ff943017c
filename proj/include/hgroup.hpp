#pragma once

#include "hgroup/error.hpp"
#include "hgroup/finite_group.hpp"
#include "hgroup/builtin_groups.hpp"
#include "hgroup/triple.hpp"
#include "hgroup/hypergroup.hpp"
#include "hgroup/morphism.hpp"
#include "hgroup/galois_field.hpp"
#include "hgroup/constructions.hpp"
#include "hgroup/standard_construction.hpp"
#include "hgroup/exact_product.hpp"
#include "hgroup/equivalence.hpp"
#include "hgroup/catalog.hpp"
#include "hgroup/suite.hpp"
#include "hgroup/text_format.hpp"
