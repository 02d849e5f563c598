#ifndef QSTEINBERG_QSTEINBERG_HPP
#define QSTEINBERG_QSTEINBERG_HPP

#include "algebraic.hpp"
#include "an_chars.hpp"
#include "classify.hpp"
#include "integer.hpp"
#include "partitions.hpp"
#include "query.hpp"
#include "serialize.hpp"
#include "sn_chars.hpp"
#include "spin_chars.hpp"

#endif // QSTEINBERG_QSTEINBERG_HPP
