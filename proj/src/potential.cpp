#include "goodinv/potential.hpp"
