#include <doctest.h>

#include "ringatlas/harness.hpp"
