// Single-TU build of the amalgamated test framework (provides main).
#include <catch2/catch_amalgamated.cpp>
