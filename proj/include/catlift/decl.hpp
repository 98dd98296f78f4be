#pragma once

#include <map>
#include <optional>

#include "catlift/distlaw.hpp"
#include "catlift/hopf.hpp"

namespace catlift {

// A parsed declaration file: named sections holding fully built structures
// plus the reference names needed to serialize them back. Section kinds:
// category, monoidal, action, monad, law, linear.

struct MonoidalSection {
  std::string base_name;
  MonoidalPtr monoidal;
};

struct ActionSection {
  std::string monoidal_name;
  std::string cat_name;
  ActionPtr action;
};

struct MonadSection {
  std::string cat_name;
  Monad monad;
};

struct LawSection {
  std::string action_name;
  std::string monad_name;
  DistributiveLaw law;
};

struct LinearSection {
  LinearBundle bundle;
  std::optional<LinMap> law;  // explicit matrix; the canonical one if absent
};

struct Declaration {
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name)
  std::map<std::string, CatPtr> categories;
  std::map<std::string, MonoidalSection> monoidals;
  std::map<std::string, ActionSection> actions;
  std::map<std::string, MonadSection> monads;
  std::map<std::string, LawSection> laws;
  std::map<std::string, LinearSection> linears;

  bool has(const std::string& name) const;
};

// Whitespace-tokenized line format, # comments, sections closed by "end".
// References resolve to sections earlier in the same file. Throws
// MalformedInput with a line number on any shape or reference problem.
Declaration parse_declaration(const std::string& text);

Declaration load_declaration_file(const std::string& path);

// Canonical form: sections in declaration order, fixed line order inside
// each section, two-space indent, single-space separators. Serializing a
// parse of the output is byte-identical.
std::string serialize_declaration(const Declaration& d);

void save_declaration_file(const Declaration& d, const std::string& path);

// Helpers used by the CLI to register built structures for serialization.
void add_category(Declaration& d, const std::string& name, CatPtr cat);
void add_monoidal(Declaration& d, const std::string& name,
                  const std::string& base, MonoidalPtr m);
void add_action(Declaration& d, const std::string& name,
                const std::string& monoidal, const std::string& cat,
                ActionPtr a);
void add_monad(Declaration& d, const std::string& name, const std::string& cat,
               Monad t);
void add_law(Declaration& d, const std::string& name, const std::string& action,
             const std::string& monad, DistributiveLaw l);
void add_linear(Declaration& d, const std::string& name, LinearSection s);

}  // namespace catlift
