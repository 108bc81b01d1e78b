#ifndef WEYL_WEYL_HPP
#define WEYL_WEYL_HPP

#include "weyl/cpolynomial.hpp"
#include "weyl/errors.hpp"
#include "weyl/expression.hpp"
#include "weyl/fock.hpp"
#include "weyl/gauss_rational.hpp"
#include "weyl/harmonic.hpp"
#include "weyl/hypergeometric.hpp"
#include "weyl/json_io.hpp"
#include "weyl/linalg.hpp"
#include "weyl/numerics.hpp"
#include "weyl/ordering.hpp"
#include "weyl/radial.hpp"
#include "weyl/random.hpp"
#include "weyl/rational.hpp"
#include "weyl/sparse_sum.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/verify.hpp"
#include "weyl/weyl_element.hpp"

#endif  // WEYL_WEYL_HPP
