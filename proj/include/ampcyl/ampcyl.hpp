#ifndef AMPCYL_AMPCYL_HPP
#define AMPCYL_AMPCYL_HPP

#include "ampcyl/bundle.hpp"
#include "ampcyl/cases.hpp"
#include "ampcyl/cone2.hpp"
#include "ampcyl/contraction.hpp"
#include "ampcyl/figure.hpp"
#include "ampcyl/lattice.hpp"
#include "ampcyl/linalg.hpp"
#include "ampcyl/rational.hpp"
#include "ampcyl/report.hpp"
#include "ampcyl/surface.hpp"
#include "ampcyl/verify.hpp"

#endif // AMPCYL_AMPCYL_HPP
