#include "orbva/util.hpp"
