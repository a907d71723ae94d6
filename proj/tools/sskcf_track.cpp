#include <sskcf/harness.hpp>

int main(int argc, char** argv) { return sskcf::run(argc, argv); }
