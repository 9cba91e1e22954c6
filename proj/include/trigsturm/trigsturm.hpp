#ifndef TRIGSTURM_TRIGSTURM_HPP
#define TRIGSTURM_TRIGSTURM_HPP

#include "trigsturm/exactnum.hpp"
#include "trigsturm/poly.hpp"
#include "trigsturm/sturm.hpp"
#include "trigsturm/trig.hpp"
#include "trigsturm/prover.hpp"
#include "trigsturm/paramsolve.hpp"
#include "trigsturm/parser.hpp"
#include "trigsturm/report.hpp"
#include "trigsturm/corpus.hpp"

#endif  // TRIGSTURM_TRIGSTURM_HPP
