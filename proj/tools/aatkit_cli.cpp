// aatkit command-line front end. Every subcommand builds a JSON request and
// hands it to aatkit_run; the exit code is the verdict tier of the result, or
// 3 with a JSON diagnostic on stderr when the input is rejected.

#include "aatkit/aatkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int kInputError = 3;

struct InputError {
  int status;
  std::string message;
};

int diagnose(int status, const std::string& message) {
  Json d{{"error", {{"code", status}, {"status", aatkit_status_name(status)}, {"message", message}}}};
  std::cerr << d.dump(2) << "\n";
  return kInputError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{AATKIT_IO_ERROR, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError{AATKIT_PARSE_ERROR, origin + ": " + e.what()};
  }
}

// catalog:<name> stays a reference; anything else is a JSON file.
Json document(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) return arg;
  return parse_text(read_file(arg), arg);
}

// Inline JSON such as "[2]" or a path to a file holding it.
Json literal(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_text(read_file(arg), arg);
  return parse_text(arg, "'" + arg + "'");
}

// Exact rationals travel as strings.
Json rational(const std::string& arg) { return arg; }

struct Budgets {
  unsigned degree = 0;
  unsigned order = 0;
};

void apply_cap(Json& req) {
  if (req.contains("max_monomials")) return;
  if (const char* cap = std::getenv("AATKIT_MAX_MONOMIALS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (!*cap || *end || v == 0) throw InputError{AATKIT_INVALID_INPUT, "AATKIT_MAX_MONOMIALS must be a positive integer"};
    req["max_monomials"] = v;
  }
}

int emit(const std::string& command, Json req, const std::string& out_path) {
  apply_cap(req);
  const std::string text = req.dump();
  aatkit_result* res = nullptr;
  const int st = aatkit_run(command.c_str(), text.c_str(), &res);
  if (st != AATKIT_OK) return diagnose(st, aatkit_last_error());
  const std::string doc = aatkit_result_json(res);
  const int tier = aatkit_result_verdict(res);
  aatkit_result_free(res);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << doc)) return diagnose(AATKIT_IO_ERROR, "cannot write '" + out_path + "'");
  }
  return tier;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aatkit: exact certificates for analytic addition theorems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(aatkit_version()));
  std::string out_path;
  app.add_option("-o,--out", out_path, "write the result document here instead of stdout");

  std::string command;
  Json request;
  Budgets b;
  std::string map, f, g, alpha, group, other, system, input, cert, op = "analyze", problem, name, groups;
  std::string isolate_at, identify, eval_x, width, cell;
  unsigned n_max = 0, digits = 0, samples = 0, branch = 0;
  std::size_t max_monomials = 0;

  auto budgets = [&](CLI::App* s, bool degree) {
    if (degree) s->add_option("-d,--degree", b.degree, "total degree bound")->required()->check(CLI::PositiveNumber);
    s->add_option("-N,--order", b.order, "truncation order")->required()->check(CLI::PositiveNumber);
    if (degree) s->add_option("--max-monomials", max_monomials, "monomial cap")->check(CLI::PositiveNumber);
  };

  auto* aat = app.add_subcommand("aat-check", "search addition annihilators for a germ");
  aat->add_option("--map", map, "catalog:<name> or germ file")->required();
  budgets(aat, true);

  auto* vaat = app.add_subcommand("verify-aat", "re-verify an aat-check certificate");
  vaat->add_option("certificate", cert)->required();

  auto* alg = app.add_subcommand("algdep", "algebraic dependence of series");
  alg->add_option("--input", input, "file with target/basis or series")->required();
  budgets(alg, true);

  auto* vann = app.add_subcommand("verify-annihilator", "re-verify an algdep certificate");
  vann->add_option("certificate", cert)->required();

  auto* vsys = app.add_subcommand("verify-system", "check a rational addition system");
  vsys->add_option("--system", system, "catalog:<name> or system file")->required();
  budgets(vsys, false);

  auto* iso = app.add_subcommand("iso-witness", "test a linear isomorphism candidate");
  iso->add_option("--f", f)->required();
  iso->add_option("--g", g)->required();
  iso->add_option("--alpha", alpha, "matrix, e.g. \"[2]\" or \"[[1,0],[0,1]]\"")->required();
  budgets(iso, true);

  auto* viso = app.add_subcommand("verify-iso", "re-verify an iso-witness certificate");
  viso->add_option("certificate", cert)->required();

  auto* per = app.add_subcommand("periods", "period group analysis");
  per->add_option("--group", group, "catalog:<name> or period group file")->required();
  per->add_option("--op", op)->check(CLI::IsMember({"analyze", "scale-into", "index", "apply-alpha", "compare"}));
  per->add_option("--other", other);
  per->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  per->add_option("--alpha", alpha);

  auto* rank = app.add_subcommand("rank-report", "tabulate period ranks");
  rank->add_option("--groups", groups, "comma separated catalog:<name> or files")->required();

  auto* br = app.add_subcommand("branch", "cells and branches of P(x, y) = 0");
  br->add_option("--problem", problem, "branch problem file")->required();
  br->add_option("--isolate-at", isolate_at);
  br->add_option("--identify", identify, "x0,y_lo,y_hi");
  br->add_option("--evaluate", eval_x, "x");
  br->add_option("--width", width);
  br->add_option("--cell", cell);
  br->add_option("--branch", branch)->check(CLI::PositiveNumber);

  auto* pc = app.add_subcommand("period-check", "numeric cross-check of periods");
  pc->add_option("--map", map)->required();
  pc->add_option("--digits,--precision", digits)->required()->check(CLI::PositiveNumber);
  pc->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
  pc->add_option("--group", group);

  auto* cat = app.add_subcommand("catalog", "built-in manifest or one entry");
  cat->add_option("--name", name);

  auto* ver = app.add_subcommand("verify", "re-run any result document and compare");
  ver->add_option("certificate", cert)->required();

  auto* run = app.add_subcommand("run", "run a command on a raw request file");
  std::string run_cmd;
  run->add_option("command", run_cmd)->required();
  run->add_option("request", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return diagnose(AATKIT_INVALID_INPUT, e.what());
  }

  try {
    CLI::App* s = app.get_subcommands().front();
    command = s->get_name();
    auto with_budgets = [&](Json r, bool degree) {
      if (degree) r["degree"] = b.degree;
      r["order"] = b.order;
      if (degree && max_monomials) r["max_monomials"] = max_monomials;
      return r;
    };
    if (s == aat) {
      request = with_budgets({{"map", document(map)}}, true);
    } else if (s == vaat || s == vann || s == viso || s == ver) {
      request = {{"certificate", document(cert)}};
    } else if (s == alg) {
      request = with_budgets(document(input), true);
    } else if (s == vsys) {
      request = with_budgets({{"system", document(system)}}, false);
    } else if (s == iso) {
      request = with_budgets({{"f", document(f)}, {"g", document(g)}, {"alpha", literal(alpha)}}, true);
    } else if (s == per) {
      request = {{"op", op}, {"group", document(group)}};
      if (!other.empty()) request["other"] = document(other);
      if (n_max) request["n_max"] = n_max;
      if (!alpha.empty()) request["alpha"] = literal(alpha);
    } else if (s == rank) {
      Json list = Json::array();
      for (const auto& x : split_commas(groups)) list.push_back(document(x));
      request = {{"groups", std::move(list)}};
    } else if (s == br) {
      request = {{"problem", document(problem)}};
      if (!isolate_at.empty()) request["isolate_at"] = rational(isolate_at);
      if (!identify.empty()) {
        const auto parts = split_commas(identify);
        if (parts.size() != 3) throw InputError{AATKIT_INVALID_INPUT, "--identify takes x0,y_lo,y_hi"};
        request["identify"] = {{"x0", parts[0]}, {"y_lo", parts[1]}, {"y_hi", parts[2]}};
      }
      if (!eval_x.empty()) {
        if (width.empty()) throw InputError{AATKIT_INVALID_INPUT, "--evaluate needs --width"};
        Json e{{"x", rational(eval_x)}, {"width", rational(width)}};
        if (!cell.empty() || branch) {
          if (cell.empty() || !branch) throw InputError{AATKIT_INVALID_INPUT, "--cell and --branch go together"};
          e["cell"] = literal(cell);
          e["branch"] = branch;
        }
        request["evaluate"] = std::move(e);
      }
    } else if (s == pc) {
      request = {{"map", document(map)}, {"digits", digits}, {"samples", samples}};
      if (!group.empty()) request["group"] = document(group);
    } else if (s == cat) {
      request = Json::object();
      if (!name.empty()) request["name"] = name;
    } else if (s == run) {
      command = run_cmd;
      request = document(input);
    }
    return emit(command, std::move(request), out_path);
  } catch (const InputError& e) {
    return diagnose(e.status, e.message);
  }
}
