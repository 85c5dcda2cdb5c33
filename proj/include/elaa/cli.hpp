#pragma once

namespace elaa {

int run_cli(int argc, char** argv);

}  // namespace elaa
