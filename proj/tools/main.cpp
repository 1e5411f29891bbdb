#include "cli.hpp"
#include "polyforge/ce/presets.hpp"
#include "polyforge/error.hpp"

namespace polyforge::cli {

std::vector<mpq_class> parse_rationals(const std::string& csv) {
  std::vector<mpq_class> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    out.push_back(ce::parse_rational(csv.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

std::vector<mpz_class> parse_naturals(const std::string& csv) {
  std::vector<mpz_class> out;
  for (const auto& q : parse_rationals(csv)) {
    if (q.get_den() != 1 || q < 0) throw CLI::ValidationError("expected naturals: " + csv);
    out.push_back(q.get_num());
  }
  return out;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace polyforge::cli

int main(int argc, char** argv) {
  using namespace polyforge::cli;
  CLI::App app{"polyforge: explicit polynomial indicator functions and their checks", "polyforge"};
  app.require_subcommand(1);
  std::vector<Command> commands;
  add_forge(app, commands);
  add_verify(app, commands);
  add_sphere(app, commands);
  add_coding(app, commands);
  add_eval(app, commands);

  if (argc < 2) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    for (auto& c : commands)
      if (c.app->parsed()) return c.run();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const polyforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDisagreement;
  }
  std::cerr << app.help();
  return kUsage;
}
