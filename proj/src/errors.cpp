#include "cirldp/errors.hpp"
