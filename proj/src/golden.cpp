#include "goodinv/groups.hpp"
