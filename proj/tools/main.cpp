#include "app.h"

int main(int argc, char** argv) { return volterra::app::run_cli(argc, argv); }
