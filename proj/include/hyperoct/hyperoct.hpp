#pragma once

#include "hyperoct/bn_radix.hpp"
#include "hyperoct/inversion_stats.hpp"
#include "hyperoct/mahonian.hpp"
#include "hyperoct/ranking.hpp"
#include "hyperoct/root_system.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/text.hpp"
#include "hyperoct/verify.hpp"
