#include <iostream>

#include "zeta/cli/commands.hpp"
#include "zeta/errors.hpp"

int main(int argc, char** argv) {
  using namespace zeta::cli;
  RunConfig cfg;
  try {
    cfg = RunConfig::parse(argc, argv);
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "zeta: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    return dispatch(cfg, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "zeta: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zeta: " << e.what() << '\n';
    return kExitConfig;
  } catch (const zeta::ZetaError& e) {
    std::cerr << "zeta: " << e.what() << '\n';
    return kExitNumerical;
  }
}
