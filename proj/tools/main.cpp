#include "gonet/cli.hpp"

int main(int argc, char** argv) {
    return gonet::cli::run(argc, argv);
}
