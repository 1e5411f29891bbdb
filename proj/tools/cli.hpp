#pragma once

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <gmpxx.h>

namespace polyforge::cli {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kDisagreement = 1, kUsage = 2 };

// A subcommand's action returns the process exit code.
struct Command {
  CLI::App* app;
  std::function<int()> run;
};

void add_forge(CLI::App& app, std::vector<Command>& out);
void add_verify(CLI::App& app, std::vector<Command>& out);
void add_sphere(CLI::App& app, std::vector<Command>& out);
void add_coding(CLI::App& app, std::vector<Command>& out);
void add_eval(CLI::App& app, std::vector<Command>& out);

std::vector<mpq_class> parse_rationals(const std::string& csv);
std::vector<mpz_class> parse_naturals(const std::string& csv);
std::string q_str(const mpq_class& q);
void print(const Json& j);

}  // namespace polyforge::cli
