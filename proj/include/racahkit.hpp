///
/// \file   racahkit.hpp
///
/// \brief  Umbrella header.
///

#ifndef RACAHKIT_HPP
#define RACAHKIT_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"
#include "racahkit/intersection.hpp"
#include "racahkit/leonard.hpp"
#include "racahkit/matrix.hpp"
#include "racahkit/racah.hpp"
#include "racahkit/render.hpp"
#include "racahkit/report.hpp"
#include "racahkit/verify.hpp"

#endif // RACAHKIT_HPP
