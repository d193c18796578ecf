#include "goodinv/reduction.hpp"
