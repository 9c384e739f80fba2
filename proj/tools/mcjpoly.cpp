#include <mcj/cli.hpp>

int main(int argc, char** argv) { return mcj::run(std::vector<std::string>(argv + 1, argv + argc)); }
