#include <iostream>

#include "slzeta/acceptance.hpp"

int main() { return slzeta::acceptance::report(std::cout) ? 0 : 1; }
