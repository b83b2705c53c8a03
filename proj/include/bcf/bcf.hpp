#ifndef BCF_BCF_HPP
#define BCF_BCF_HPP

#include "bcf/error.hpp"
#include "bcf/numeric.hpp"
#include "bcf/cartan.hpp"
#include "bcf/weyl.hpp"
#include "bcf/seed.hpp"
#include "bcf/poly.hpp"
#include "bcf/ratfunc.hpp"
#include "bcf/mutation.hpp"
#include "bcf/factor.hpp"
#include "bcf/sln.hpp"
#include "bcf/random.hpp"
#include "bcf/parallel.hpp"
#include "bcf/io.hpp"

#endif
