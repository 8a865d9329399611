#include "app.hpp"

int main(int argc, char** argv) { return hypercurv::app::main_entry(argc, argv); }
