#include "linext/cli.hpp"

int main(int argc, char** argv) { return linext::run(std::vector<std::string>(argv + 1, argv + argc)); }
