#pragma once

#include "packcover/reductions/amplifier.hpp"
#include "packcover/reductions/coloring.hpp"
#include "packcover/reductions/cut_to_allele.hpp"
#include "packcover/reductions/equation_gadget.hpp"
#include "packcover/reductions/is_to_mpc.hpp"
#include "packcover/reductions/label_cover.hpp"
#include "packcover/reductions/lin2_to_tp.hpp"
