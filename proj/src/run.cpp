#include "catlift/run.hpp"

#include <sstream>

#include "catlift/errors.hpp"

namespace catlift {
namespace {

void render(const Report& r, const std::string& what, const RunOptions& opt,
            RunResult& out) {
  for (const auto& v : r.items) out.violations.push_back(v);
  if (r.ok()) {
    out.text += "PASS " + what + "\n";
    return;
  }
  out.status = 1;
  out.text += "FAIL " + what + "\n";
  for (const auto& v : r.items) {
    out.text += "  " + v.check;
    if (opt.witnesses && !v.where.empty()) {
      out.text += " at (";
      for (size_t i = 0; i < v.where.size(); ++i) {
        if (i) out.text += ", ";
        out.text += v.where[i].first + "=" + v.where[i].second;
      }
      out.text += ")";
    }
    if (opt.witnesses && !v.detail.empty()) out.text += ": " + v.detail;
    out.text += "\n";
  }
}

// Each stage runs only if the previous ones passed, so reports point at the
// innermost broken layer.
struct Stack {
  RunResult& out;
  const RunOptions& opt;
  bool alive = true;

  void stage(const std::string& what, const Report& r) {
    if (!alive) return;
    render(r, what, opt, out);
    if (!r.ok()) alive = false;
  }
};

void check_monoidal_stack(const std::string& name, const MonoidalSection& s,
                          Stack& st) {
  st.stage("category " + s.base_name, check_category(*s.monoidal->base));
  st.stage("monoidal " + name, check_monoidal(*s.monoidal));
}

void check_action_stack(const Declaration& d, const std::string& name,
                        const ActionSection& s, Stack& st) {
  check_monoidal_stack(s.monoidal_name, d.monoidals.at(s.monoidal_name), st);
  st.stage("category " + s.cat_name, check_category(*s.action->M));
  st.stage("action " + name, check_action(*s.action));
}

void check_monad_stack(const std::string& name, const MonadSection& s,
                       Stack& st) {
  st.stage("category " + s.cat_name, check_category(*s.monad.base()));
  st.stage("monad " + name, check_monad(s.monad));
}

void check_linear_stack(const std::string& name, const LinearSection& s,
                        Stack& st) {
  const LinearBundle& b = s.bundle;
  st.stage("linear " + name + " structure", check_linear_bundle(b));
  if (!st.alive) return;
  const LinMap l = s.law ? *s.law
                         : canonical_law(b.field, b.B, b.A, b.M.dim, b.Q);
  st.stage("linear " + name + " law",
           check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, l));
}

}  // namespace

RunResult run_check(const Declaration& d, const std::string& target,
                    const RunOptions& opt) {
  RunResult out;
  Stack st{out, opt};
  if (auto it = d.categories.find(target); it != d.categories.end()) {
    st.stage("category " + target, check_category(*it->second));
  } else if (auto im = d.monoidals.find(target); im != d.monoidals.end()) {
    check_monoidal_stack(target, im->second, st);
  } else if (auto ia = d.actions.find(target); ia != d.actions.end()) {
    check_action_stack(d, target, ia->second, st);
  } else if (auto io = d.monads.find(target); io != d.monads.end()) {
    check_monad_stack(target, io->second, st);
  } else if (auto il = d.laws.find(target); il != d.laws.end()) {
    const LawSection& s = il->second;
    check_action_stack(d, s.action_name, d.actions.at(s.action_name), st);
    check_monad_stack(s.monad_name, d.monads.at(s.monad_name), st);
    st.stage("law " + target, check_distlaw(s.law));
  } else if (auto ix = d.linears.find(target); ix != d.linears.end()) {
    check_linear_stack(target, ix->second, st);
  } else {
    throw MalformedInput("no section named '" + target + "'");
  }
  out.text += out.status == 0 ? "OK\n" : "VIOLATIONS FOUND\n";
  return out;
}

RunResult run_lift(const Declaration& d, const std::string& law_name,
                   const RunOptions& opt) {
  auto it = d.laws.find(law_name);
  if (it == d.laws.end())
    throw MalformedInput("no law section named '" + law_name + "'");
  const LawSection& s = it->second;
  RunResult out;
  Report pre = check_distlaw(s.law);
  render(pre, "law " + law_name, opt, out);
  if (!pre.ok()) {
    out.text += "VIOLATIONS FOUND\n";
    return out;
  }
  EMPtr em = em_category(s.law.monad, opt.caps.em_mor_cap);
  LiftedAction lifted = lift_from_law(s.law, em);
  Report post = check_action(lifted.tilde);
  post.merge(check_strict_lift(lifted.tilde, *em, *s.law.action));
  render(post, "lifted action", opt, out);

  const ActionSection& as = d.actions.at(s.action_name);
  const std::string& base = d.monoidals.at(as.monoidal_name).base_name;
  Declaration o;
  add_category(o, base, s.law.action->C->base);
  add_monoidal(o, as.monoidal_name, base,
               d.monoidals.at(as.monoidal_name).monoidal);
  add_category(o, law_name + "_em", em->base);
  add_action(o, law_name + "_lifted", as.monoidal_name, law_name + "_em",
             std::make_shared<const MonoidalAction>(lifted.tilde));
  out.output = std::move(o);
  out.counts.emplace_back("em_objects", em->base->n_obj());
  out.counts.emplace_back("em_morphisms", em->base->n_mor());
  out.text += out.status == 0 ? "OK\n" : "VIOLATIONS FOUND\n";
  return out;
}

RunResult run_unlift(const Declaration& d, const std::string& action_name,
                     const std::string& monad_name, const RunOptions& opt) {
  auto ia = d.actions.find(action_name);
  if (ia == d.actions.end())
    throw MalformedInput("no action section named '" + action_name + "'");
  auto im = d.monads.find(monad_name);
  if (im == d.monads.end())
    throw MalformedInput("no monad section named '" + monad_name + "'");
  RunResult out;
  std::vector<LiftedAction> lifts =
      enumerate_strict_lifts(ia->second.action, im->second.monad, opt.caps);
  out.counts.emplace_back("lifts", static_cast<long long>(lifts.size()));
  Declaration o;
  const std::string& base = d.monoidals.at(ia->second.monoidal_name).base_name;
  add_category(o, ia->second.cat_name, ia->second.action->M);
  if (base != ia->second.cat_name)
    add_category(o, base, ia->second.action->C->base);
  add_monoidal(o, ia->second.monoidal_name, base,
               d.monoidals.at(ia->second.monoidal_name).monoidal);
  add_action(o, action_name, ia->second.monoidal_name, ia->second.cat_name,
             ia->second.action);
  add_monad(o, monad_name, im->second.cat_name, im->second.monad);
  int idx = 0;
  for (const auto& lift : lifts) {
    DistributiveLaw law = law_from_lift(lift);
    Report r = check_distlaw(law);
    render(r, "derived law " + std::to_string(idx), opt, out);
    add_law(o, "law" + std::to_string(idx), action_name, monad_name,
            std::move(law));
    ++idx;
  }
  out.output = std::move(o);
  out.text += "lifts " + std::to_string(lifts.size()) + "\n";
  out.text += out.status == 0 ? "OK\n" : "VIOLATIONS FOUND\n";
  return out;
}

RunResult run_roundtrip(const Declaration& d, const std::string& action_name,
                        const std::string& monad_name, const RunOptions& opt) {
  auto ia = d.actions.find(action_name);
  if (ia == d.actions.end())
    throw MalformedInput("no action section named '" + action_name + "'");
  auto im = d.monads.find(monad_name);
  if (im == d.monads.end())
    throw MalformedInput("no monad section named '" + monad_name + "'");
  RunResult out;
  BijectionOutcome b =
      run_bijection(ia->second.action, im->second.monad, opt.caps);
  out.counts.emplace_back("laws", static_cast<long long>(b.law_count));
  out.counts.emplace_back("lifts", static_cast<long long>(b.lift_count));
  out.text += "laws " + std::to_string(b.law_count) + "\n";
  out.text += "lifts " + std::to_string(b.lift_count) + "\n";
  auto flag = [&](bool ok, const std::string& what) {
    if (ok) {
      out.text += "PASS " + what + "\n";
    } else {
      out.status = 1;
      out.text += "FAIL " + what + "\n";
      out.violations.push_back({what, {}, {}});
    }
  };
  flag(b.counts_equal, "bijection.counts");
  flag(b.law_roundtrip_ok, "bijection.law_roundtrip");
  flag(b.lift_roundtrip_ok, "bijection.lift_roundtrip");
  flag(b.cross_match_ok, "bijection.cross_match");
  out.text += out.status == 0 ? "OK\n" : "VIOLATIONS FOUND\n";
  return out;
}

RunResult run_linear_demo(const RunOptions& opt) {
  RunResult out;
  LinearBundle b = bundle_f3();
  Stack st{out, opt};
  st.stage("linear structure", check_linear_bundle(b));
  const LinMap l = canonical_law(b.field, b.B, b.A, b.M.dim, b.Q);
  st.stage("canonical law", check_linear_distlaw(b.field, b.B, b.A, b.M, b.Q, l));
  AModule lifted{b.M.dim * b.Q.dim, lifted_action_map(b.field, b.A, b.M, b.Q, l)};
  st.stage("lifted module", check_amodule(b.field, b.A, lifted));
  st.stage("induced monad", check_lifted_monad(b.field, b.B, b.A, b.M));
  if (opt.witnesses) {
    out.text += "law matrix:\n" + lin_to_string(b.field, l);
    out.text += "lifted action matrix:\n" + lin_to_string(b.field, lifted.act);
  }
  out.text += out.status == 0 ? "OK\n" : "VIOLATIONS FOUND\n";
  return out;
}

}  // namespace catlift
