#include "wreath/cli.hpp"

int main(int argc, char** argv) { return wreath::dispatch(argc, argv); }
