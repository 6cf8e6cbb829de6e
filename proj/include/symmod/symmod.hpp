#pragma once
//
// symmod: a verification-and-exploration toolkit for triangle inequalities of
// the operator symmetric modulus. Umbrella header.
//

#include "symmod/matcore.hpp"
#include "symmod/moduli.hpp"
#include "symmod/spectral_order.hpp"
#include "symmod/means.hpp"
#include "symmod/sampler.hpp"
#include "symmod/witness.hpp"
#include "symmod/theorem_suite.hpp"
#include "symmod/probe.hpp"
#include "symmod/report.hpp"
