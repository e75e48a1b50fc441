#include "powsum/cli.hpp"

int main(int argc, char** argv) { return powsum::dispatch(argc, argv); }
