#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "catlift/decl.hpp"
#include "catlift/instances.hpp"

namespace {

using namespace catlift;

// Shared layout for the instance fixtures: acted category "m", acting
// category "g" when distinct, monoidal "c", action "act", monad "mon", law
// "law" when one exists.
void require_clean(const std::string& fixture, const std::string& what,
                   const Report& r) {
  if (r.ok()) return;
  std::cerr << "fixture " << fixture << ": " << what << " does not verify:\n"
            << r.to_string();
  std::exit(1);
}

Declaration bundle_decl(const InstanceBundle& b,
                        const std::vector<MorId>* law_components) {
  require_clean(b.name, "acted category", check_category(*b.action->M));
  require_clean(b.name, "acting category", check_category(*b.action->C->base));
  require_clean(b.name, "monoidal structure", check_monoidal(*b.action->C));
  require_clean(b.name, "action", check_action(*b.action));
  require_clean(b.name, "monad", check_monad(b.monad));
  Declaration d;
  const CatPtr m = b.action->M;
  const CatPtr g = b.action->C->base;
  add_category(d, "m", m);
  std::string base = "m";
  if (g.get() != m.get()) {
    add_category(d, "g", g);
    base = "g";
  }
  add_monoidal(d, "c", base, b.action->C);
  add_action(d, "act", "c", "m", b.action);
  add_monad(d, "mon", "m", b.monad);
  if (law_components) {
    DistributiveLaw law = make_distlaw(b.action, b.monad, *law_components);
    const Report r = check_distlaw(law);
    if (!r.ok()) {
      std::cerr << "fixture " << b.name << " law does not verify:\n"
                << r.to_string();
      std::exit(1);
    }
    add_law(d, "law", "act", "mon", std::move(law));
  }
  return d;
}

// The unique law for a const-top closure with a max action: every component
// is the identity at the top.
std::vector<MorId> const_top_law(const InstanceBundle& b) {
  const FinCategory& m = *b.action->M;
  const int nc = b.action->C->base->n_obj();
  return std::vector<MorId>(static_cast<size_t>(m.n_obj()) * nc,
                            m.identity[m.n_obj() - 1]);
}

// Identity monad: the component at (m, q) is the identity of m act q.
std::vector<MorId> identity_law(const InstanceBundle& b) {
  const FinCategory& m = *b.action->M;
  const int nc = b.action->C->base->n_obj();
  std::vector<MorId> out(static_cast<size_t>(m.n_obj()) * nc);
  for (int i = 0; i < m.n_obj(); ++i)
    for (int q = 0; q < nc; ++q)
      out[static_cast<size_t>(i) * nc + q] = m.identity[b.action->ao(i, q)];
  return out;
}

// Terminal monad: T collapses everything onto the terminal object, which the
// action fixes, so the components are identities there.
std::vector<MorId> terminal_law(const InstanceBundle& b) {
  const FinCategory& m = *b.action->M;
  const int nc = b.action->C->base->n_obj();
  std::vector<MorId> out(static_cast<size_t>(m.n_obj()) * nc);
  for (int i = 0; i < m.n_obj(); ++i)
    for (int q = 0; q < nc; ++q)
      out[static_cast<size_t>(i) * nc + q] =
          m.identity[b.monad.t_obj(b.action->ao(i, q))];
  return out;
}

struct Fixture {
  std::string file;
  std::string content;
};

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  auto put = [&](const std::string& name, const Declaration& d) {
    out.push_back({name + ".cat", serialize_declaration(d)});
  };

  {
    InstanceBundle b = bundle_closure_chain2();
    std::vector<MorId> law = const_top_law(b);
    put(b.name, bundle_decl(b, &law));
  }
  {
    InstanceBundle b = bundle_closure_chain3();
    std::vector<MorId> law = const_top_law(b);
    put(b.name, bundle_decl(b, &law));
  }
  {
    // no law exists here; the fixture carries only the ingredients
    InstanceBundle b = bundle_min_chain2();
    put(b.name, bundle_decl(b, nullptr));
  }
  {
    InstanceBundle b = bundle_idmonad_chain3();
    std::vector<MorId> law = identity_law(b);
    put(b.name, bundle_decl(b, &law));
  }
  {
    InstanceBundle b = bundle_finset_conj();
    std::vector<MorId> law = terminal_law(b);
    put(b.name, bundle_decl(b, &law));
  }
  {
    InstanceBundle b = bundle_z4_translation();
    // translation by 1 against negation: the nontrivial component doubles it
    std::vector<MorId> law = {0, 2};
    put(b.name, bundle_decl(b, &law));
  }
  {
    Declaration d;
    add_linear(d, "lin", LinearSection{bundle_f3(), std::nullopt});
    put("linear_f3", d);
  }
  {
    // same instance, law component bent to a well-typed wrong morphism
    InstanceBundle b = bundle_z4_translation();
    Declaration d = bundle_decl(b, nullptr);
    add_law(d, "law", "act", "mon",
            make_distlaw(b.action, b.monad, {0, 1}));
    put("broken_law", d);
  }
  out.push_back({"broken_ref.cat",
                 "# references a category that was never declared\n"
                 "monoidal c\n"
                 "  base nowhere\n"
                 "  unit x\n"
                 "end\n"});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool verify = false;
  std::string dir;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verify")
      verify = true;
    else
      dir = arg;
  }
  if (dir.empty()) {
    std::cerr << "usage: genfixtures [--verify] <dir>\n";
    return 2;
  }
  const auto fixtures = all_fixtures();
  if (verify) {
    int bad = 0;
    for (const auto& f : fixtures) {
      std::ifstream in(std::filesystem::path(dir) / f.file, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      if (!in || buf.str() != f.content) {
        std::cerr << "mismatch: " << f.file << '\n';
        ++bad;
      }
    }
    if (bad == 0) std::cout << "all " << fixtures.size() << " fixtures match\n";
    return bad ? 1 : 0;
  }
  std::filesystem::create_directories(dir);
  for (const auto& f : fixtures) {
    std::ofstream out(std::filesystem::path(dir) / f.file, std::ios::binary);
    out << f.content;
  }
  std::cout << "wrote " << fixtures.size() << " fixtures to " << dir << '\n';
  return 0;
}
