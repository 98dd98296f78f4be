#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "catlift/errors.hpp"
#include "catlift/run.hpp"

namespace {

using catlift::Declaration;
using catlift::RunOptions;
using catlift::RunResult;

// --caps index=16,hom=8,em=32,em_mor=64
void apply_caps(const std::string& spec, catlift::EnumCaps& caps) {
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw catlift::MalformedInput("bad --caps item '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (...) {
      throw catlift::MalformedInput("bad --caps value in '" + item + "'");
    }
    if (key == "index")
      caps.index_cap = value;
    else if (key == "hom")
      caps.hom_cap = value;
    else if (key == "em")
      caps.em_cap = value;
    else if (key == "em_mor")
      caps.em_mor_cap = value;
    else
      throw catlift::MalformedInput("unknown --caps key '" + key + "'");
  }
}

int emit(const RunResult& r, const std::string& command, bool machine,
         const std::string& out_path) {
  if (r.output) {
    if (!out_path.empty()) catlift::save_declaration_file(*r.output, out_path);
  }
  if (machine) {
    nlohmann::json j;
    j["command"] = command;
    j["status"] = r.status;
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : r.violations) {
      nlohmann::json jv;
      jv["check"] = v.check;
      nlohmann::json where = nlohmann::json::object();
      for (const auto& [k, val] : v.where) where[k] = val;
      jv["where"] = where;
      jv["detail"] = v.detail;
      viols.push_back(jv);
    }
    j["violations"] = viols;
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [k, v] : r.counts)
      counts.push_back({{"name", k}, {"value", v}});
    j["counts"] = counts;
    if (r.output && out_path.empty())
      j["output"] = catlift::serialize_declaration(*r.output);
    if (!out_path.empty()) j["out_file"] = out_path;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << r.text;
    if (r.output && out_path.empty()) {
      std::cout << "--- output ---\n";
      std::cout << catlift::serialize_declaration(*r.output);
    }
  }
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monoidal actions, monads and distributive laws"};
  app.require_subcommand(1);

  std::string caps_spec, format = "text", witnesses = "on";
  app.add_option("--caps", caps_spec, "comma list: index=,hom=,em=,em_mor=");
  app.add_option("--format", format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--witnesses", witnesses, "on|off")
      ->check(CLI::IsMember({"on", "off"}));

  std::string file, target, law, action, monad, out_path;

  CLI::App* c_check = app.add_subcommand("check", "run checkers on a section");
  c_check->add_option("file", file)->required();
  c_check->add_option("target", target)->required();

  CLI::App* c_lift = app.add_subcommand("lift", "build the lifted action of a law");
  c_lift->add_option("file", file)->required();
  c_lift->add_option("law", law)->required();
  c_lift->add_option("--out", out_path, "write the result declaration here");

  CLI::App* c_unlift =
      app.add_subcommand("unlift", "enumerate strict lifts and derive laws");
  c_unlift->add_option("file", file)->required();
  c_unlift->add_option("action", action)->required();
  c_unlift->add_option("monad", monad)->required();
  c_unlift->add_option("--out", out_path, "write the result declaration here");

  CLI::App* c_round =
      app.add_subcommand("roundtrip", "verify the law/lift bijection");
  c_round->add_option("file", file)->required();
  c_round->add_option("action", action)->required();
  c_round->add_option("monad", monad)->required();

  CLI::App* c_demo =
      app.add_subcommand("linear-demo", "built-in structure-constant instance");
  // global flags are accepted after the subcommand too
  for (CLI::App* sub : {c_check, c_lift, c_unlift, c_round, c_demo})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const bool machine = format == "machine";
  RunOptions opt;
  opt.witnesses = witnesses == "on";
  try {
    apply_caps(caps_spec, opt.caps);
    RunResult r;
    std::string command;
    if (app.got_subcommand(c_check)) {
      command = "check";
      r = run_check(catlift::load_declaration_file(file), target, opt);
    } else if (app.got_subcommand(c_lift)) {
      command = "lift";
      r = run_lift(catlift::load_declaration_file(file), law, opt);
    } else if (app.got_subcommand(c_unlift)) {
      command = "unlift";
      r = run_unlift(catlift::load_declaration_file(file), action, monad, opt);
    } else if (app.got_subcommand(c_round)) {
      command = "roundtrip";
      r = run_roundtrip(catlift::load_declaration_file(file), action, monad, opt);
    } else {
      command = "linear-demo";
      r = catlift::run_linear_demo(opt);
    }
    return emit(r, command, machine, out_path);
  } catch (const catlift::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const catlift::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 2;
  } catch (const catlift::CatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
