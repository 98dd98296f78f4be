#include "catlift/decl.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "catlift/errors.hpp"

namespace catlift {
namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw MalformedInput("line " + std::to_string(line) + ": " + msg);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '.' ||
                    c == '@' || c == '+' || c == '-';
    if (!ok) return false;
  }
  return true;
}

struct Line {
  std::vector<std::string> toks;
  int num = 0;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int num = 0;
  while (std::getline(in, raw)) {
    ++num;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line l;
    l.num = num;
    std::string tok;
    while (ls >> tok) l.toks.push_back(tok);
    if (!l.toks.empty()) out.push_back(std::move(l));
  }
  return out;
}

long long parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const MalformedInput&) {
    throw;
  } catch (...) {
    fail(line, "bad integer '" + tok + "'");
  }
}

Scalar parse_scalar(const Field& F, const std::string& tok, int line) {
  const size_t slash = tok.find('/');
  long long num, den = 1;
  if (slash == std::string::npos) {
    num = parse_int(tok, line);
  } else {
    num = parse_int(tok.substr(0, slash), line);
    den = parse_int(tok.substr(slash + 1), line);
  }
  const Scalar d = F.from_int(den);
  const auto dinv = F.inv(d);
  if (!dinv) fail(line, "denominator not invertible in '" + tok + "'");
  return F.mul(F.from_int(num), *dinv);
}

// Name-to-id maps for one category.
struct CatIndex {
  std::unordered_map<std::string, ObjId> obj;
  std::unordered_map<std::string, MorId> mor;
};

CatIndex index_cat(const FinCategory& c) {
  CatIndex ix;
  for (int i = 0; i < c.n_obj(); ++i) ix.obj[c.obj_names[i]] = i;
  for (int i = 0; i < c.n_mor(); ++i) ix.mor[c.mor_names[i]] = i;
  return ix;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Declaration run() {
    while (pos_ < lines_.size()) {
      const Line& head = lines_[pos_];
      if (head.toks.size() != 2)
        fail(head.num, "expected section header '<kind> <name>'");
      const std::string kind = head.toks[0];
      const std::string name = head.toks[1];
      if (!valid_name(name)) fail(head.num, "bad section name '" + name + "'");
      if (d_.has(name)) fail(head.num, "duplicate section name '" + name + "'");
      ++pos_;
      if (kind == "category")
        parse_category(name);
      else if (kind == "monoidal")
        parse_monoidal(name);
      else if (kind == "action")
        parse_action(name);
      else if (kind == "monad")
        parse_monad(name);
      else if (kind == "law")
        parse_law(name);
      else if (kind == "linear")
        parse_linear(name);
      else
        fail(head.num, "unknown section kind '" + kind + "'");
      d_.order.emplace_back(kind, name);
    }
    return std::move(d_);
  }

 private:
  std::vector<Line> lines_;
  size_t pos_ = 0;
  Declaration d_;
  std::map<std::string, CatIndex> index_;

  bool at_end() const { return pos_ >= lines_.size(); }

  // Collects body lines until "end"; returns them without consuming past it.
  std::vector<const Line*> body(int head_line) {
    std::vector<const Line*> out;
    while (true) {
      if (at_end()) fail(head_line, "section not closed by 'end'");
      const Line& l = lines_[pos_++];
      if (l.toks.size() == 1 && l.toks[0] == "end") return out;
      out.push_back(&l);
    }
  }

  const CatPtr& need_category(const std::string& name, int line) {
    auto it = d_.categories.find(name);
    if (it == d_.categories.end()) fail(line, "unknown category '" + name + "'");
    return it->second;
  }

  ObjId obj_id(const std::string& cat, const std::string& name, int line) {
    const auto& ix = index_.at(cat).obj;
    auto it = ix.find(name);
    if (it == ix.end()) fail(line, "unknown object '" + name + "' in " + cat);
    return it->second;
  }

  MorId mor_id(const std::string& cat, const std::string& name, int line) {
    const auto& ix = index_.at(cat).mor;
    auto it = ix.find(name);
    if (it == ix.end()) fail(line, "unknown morphism '" + name + "' in " + cat);
    return it->second;
  }

  void expect_arity(const Line& l, size_t n) {
    if (l.toks.size() != n)
      fail(l.num, "'" + l.toks[0] + "' expects " + std::to_string(n - 1) +
                      " arguments");
  }

  void parse_category(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    std::vector<std::string> objs, mors;
    std::vector<ObjId> src, tgt;
    std::unordered_map<std::string, ObjId> omap;
    std::unordered_map<std::string, MorId> mmap;
    struct IdLine {
      std::string obj, mor;
      int num;
    };
    struct CompLine {
      std::string g, f, gf;
      int num;
    };
    std::vector<IdLine> ids;
    std::vector<CompLine> comps;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "objects") {
        for (size_t i = 1; i < l.toks.size(); ++i) {
          if (!valid_name(l.toks[i])) fail(l.num, "bad name '" + l.toks[i] + "'");
          if (!omap.emplace(l.toks[i], static_cast<ObjId>(objs.size())).second)
            fail(l.num, "duplicate object '" + l.toks[i] + "'");
          objs.push_back(l.toks[i]);
        }
      } else if (k == "mor") {
        expect_arity(l, 4);
        if (!valid_name(l.toks[1])) fail(l.num, "bad name '" + l.toks[1] + "'");
        auto s = omap.find(l.toks[2]);
        auto t = omap.find(l.toks[3]);
        if (s == omap.end() || t == omap.end())
          fail(l.num, "morphism endpoints must be declared objects");
        if (!mmap.emplace(l.toks[1], static_cast<MorId>(mors.size())).second)
          fail(l.num, "duplicate morphism '" + l.toks[1] + "'");
        mors.push_back(l.toks[1]);
        src.push_back(s->second);
        tgt.push_back(t->second);
      } else if (k == "identity") {
        expect_arity(l, 3);
        ids.push_back({l.toks[1], l.toks[2], l.num});
      } else if (k == "compose") {
        expect_arity(l, 4);
        comps.push_back({l.toks[1], l.toks[2], l.toks[3], l.num});
      } else {
        fail(l.num, "unknown line '" + k + "' in category");
      }
    }
    const int no = static_cast<int>(objs.size());
    const int nm = static_cast<int>(mors.size());
    std::vector<MorId> identity(no, kNoMor);
    for (const auto& id : ids) {
      auto o = omap.find(id.obj);
      auto m = mmap.find(id.mor);
      if (o == omap.end() || m == mmap.end())
        fail(id.num, "identity line names unknown object or morphism");
      if (identity[o->second] != kNoMor)
        fail(id.num, "duplicate identity for '" + id.obj + "'");
      identity[o->second] = m->second;
    }
    for (int i = 0; i < no; ++i)
      if (identity[i] == kNoMor)
        fail(head, "category " + name + ": no identity for '" + objs[i] + "'");
    std::vector<MorId> comp(static_cast<size_t>(nm) * nm, kNoMor);
    for (const auto& cl : comps) {
      auto g = mmap.find(cl.g);
      auto f = mmap.find(cl.f);
      auto gf = mmap.find(cl.gf);
      if (g == mmap.end() || f == mmap.end() || gf == mmap.end())
        fail(cl.num, "compose line names unknown morphism");
      MorId& slot = comp[static_cast<size_t>(g->second) * nm + f->second];
      if (slot != kNoMor) fail(cl.num, "duplicate compose entry");
      slot = gf->second;
    }
    auto cat = std::make_shared<const FinCategory>(
        make_category(objs, mors, std::move(src), std::move(tgt),
                      std::move(identity), std::move(comp)));
    index_.emplace(name, index_cat(*cat));
    d_.categories.emplace(name, std::move(cat));
  }

  void parse_monoidal(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    std::string base;
    std::string unit;
    int unit_line = 0;
    bool strict = false;
    std::vector<const Line*> tob, tmr, asc, run, lun;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "base") {
        expect_arity(l, 2);
        base = l.toks[1];
        need_category(base, l.num);
      } else if (k == "unit") {
        expect_arity(l, 2);
        unit = l.toks[1];
        unit_line = l.num;
      } else if (k == "strict") {
        expect_arity(l, 1);
        strict = true;
      } else if (k == "tensor_obj") {
        expect_arity(l, 4);
        tob.push_back(lp);
      } else if (k == "tensor_mor") {
        expect_arity(l, 4);
        tmr.push_back(lp);
      } else if (k == "assoc") {
        expect_arity(l, 5);
        asc.push_back(lp);
      } else if (k == "runit") {
        expect_arity(l, 3);
        run.push_back(lp);
      } else if (k == "lunit") {
        expect_arity(l, 3);
        lun.push_back(lp);
      } else {
        fail(l.num, "unknown line '" + k + "' in monoidal");
      }
    }
    if (base.empty()) fail(head, "monoidal " + name + ": missing base");
    if (unit.empty()) fail(head, "monoidal " + name + ": missing unit");
    const CatPtr cat = d_.categories.at(base);
    const int no = cat->n_obj();
    const int nm = cat->n_mor();
    Bifunctor ten = fill_bifunctor(base, base, base, tob, tmr, "tensor");
    const ObjId u = obj_id(base, unit, unit_line);
    MonoidalCategory m;
    if (strict) {
      if (!asc.empty() || !run.empty() || !lun.empty())
        fail(head, "strict monoidal lists coherence components");
      m = make_strict_monoidal(cat, std::move(ten), u);
    } else {
      std::vector<MorId> assoc(static_cast<size_t>(no) * no * no, kNoMor);
      for (const Line* lp : asc) {
        const Line& l = *lp;
        const ObjId x = obj_id(base, l.toks[1], l.num);
        const ObjId y = obj_id(base, l.toks[2], l.num);
        const ObjId z = obj_id(base, l.toks[3], l.num);
        assoc[(static_cast<size_t>(x) * no + y) * no + z] =
            mor_id(base, l.toks[4], l.num);
      }
      std::vector<MorId> runit(no, kNoMor), lunit(no, kNoMor);
      for (const Line* lp : run)
        runit[obj_id(base, lp->toks[1], lp->num)] =
            mor_id(base, lp->toks[2], lp->num);
      for (const Line* lp : lun)
        lunit[obj_id(base, lp->toks[1], lp->num)] =
            mor_id(base, lp->toks[2], lp->num);
      for (MorId v : assoc)
        if (v == kNoMor) fail(head, "monoidal " + name + ": incomplete assoc");
      for (MorId v : runit)
        if (v == kNoMor) fail(head, "monoidal " + name + ": incomplete runit");
      for (MorId v : lunit)
        if (v == kNoMor) fail(head, "monoidal " + name + ": incomplete lunit");
      m = make_monoidal(cat, std::move(ten), u, std::move(assoc),
                        std::move(runit), std::move(lunit));
    }
    (void)nm;
    d_.monoidals.emplace(
        name, MonoidalSection{base, std::make_shared<const MonoidalCategory>(
                                        std::move(m))});
  }

  // Shared table builder for tensor/act bifunctors from obj and mor lines.
  Bifunctor fill_bifunctor(const std::string& c1, const std::string& c2,
                           const std::string& cod,
                           const std::vector<const Line*>& ob,
                           const std::vector<const Line*>& mr,
                           const std::string& what) {
    const CatPtr d1 = d_.categories.at(c1);
    const CatPtr d2 = d_.categories.at(c2);
    const CatPtr dc = d_.categories.at(cod);
    std::vector<ObjId> omap(static_cast<size_t>(d1->n_obj()) * d2->n_obj(),
                            -1);
    std::vector<MorId> mmap(static_cast<size_t>(d1->n_mor()) * d2->n_mor(),
                            kNoMor);
    for (const Line* lp : ob) {
      const Line& l = *lp;
      const ObjId x = obj_id(c1, l.toks[1], l.num);
      const ObjId y = obj_id(c2, l.toks[2], l.num);
      omap[static_cast<size_t>(x) * d2->n_obj() + y] =
          obj_id(cod, l.toks[3], l.num);
    }
    for (const Line* lp : mr) {
      const Line& l = *lp;
      const MorId f = mor_id(c1, l.toks[1], l.num);
      const MorId g = mor_id(c2, l.toks[2], l.num);
      mmap[static_cast<size_t>(f) * d2->n_mor() + g] =
          mor_id(cod, l.toks[3], l.num);
    }
    for (ObjId v : omap)
      if (v < 0) throw MalformedInput(what + ": incomplete object table");
    for (MorId v : mmap)
      if (v == kNoMor) throw MalformedInput(what + ": incomplete morphism table");
    return make_bifunctor(d1, d2, dc, std::move(omap), std::move(mmap));
  }

  void parse_action(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    std::string mono, on;
    bool strict = false;
    std::vector<const Line*> aob, amr, psi, uu;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "monoidal") {
        expect_arity(l, 2);
        mono = l.toks[1];
        if (!d_.monoidals.count(mono))
          fail(l.num, "unknown monoidal '" + mono + "'");
      } else if (k == "on") {
        expect_arity(l, 2);
        on = l.toks[1];
        need_category(on, l.num);
      } else if (k == "strict") {
        expect_arity(l, 1);
        strict = true;
      } else if (k == "act_obj") {
        expect_arity(l, 4);
        aob.push_back(lp);
      } else if (k == "act_mor") {
        expect_arity(l, 4);
        amr.push_back(lp);
      } else if (k == "psi") {
        expect_arity(l, 5);
        psi.push_back(lp);
      } else if (k == "unit_u") {
        expect_arity(l, 3);
        uu.push_back(lp);
      } else {
        fail(l.num, "unknown line '" + k + "' in action");
      }
    }
    if (mono.empty()) fail(head, "action " + name + ": missing monoidal");
    if (on.empty()) fail(head, "action " + name + ": missing on");
    const MonoidalSection& ms = d_.monoidals.at(mono);
    const std::string base = ms.base_name;
    const CatPtr m = d_.categories.at(on);
    Bifunctor act = fill_bifunctor(on, base, on, aob, amr, "act");
    MonoidalAction a;
    if (strict) {
      if (!psi.empty() || !uu.empty())
        fail(head, "strict action lists coherence components");
      a = make_strict_action(ms.monoidal, m, std::move(act));
    } else {
      const int no = ms.monoidal->base->n_obj();
      std::vector<MorId> ps(static_cast<size_t>(m->n_obj()) * no * no, kNoMor);
      for (const Line* lp : psi) {
        const Line& l = *lp;
        const ObjId mm = obj_id(on, l.toks[1], l.num);
        const ObjId x = obj_id(base, l.toks[2], l.num);
        const ObjId y = obj_id(base, l.toks[3], l.num);
        ps[(static_cast<size_t>(mm) * no + x) * no + y] =
            mor_id(on, l.toks[4], l.num);
      }
      std::vector<MorId> u(m->n_obj(), kNoMor);
      for (const Line* lp : uu)
        u[obj_id(on, lp->toks[1], lp->num)] = mor_id(on, lp->toks[2], lp->num);
      for (MorId v : ps)
        if (v == kNoMor) fail(head, "action " + name + ": incomplete psi");
      for (MorId v : u)
        if (v == kNoMor) fail(head, "action " + name + ": incomplete unit_u");
      a = make_action(ms.monoidal, m, std::move(act), std::move(ps),
                      std::move(u));
    }
    d_.actions.emplace(
        name, ActionSection{mono, on, std::make_shared<const MonoidalAction>(
                                          std::move(a))});
  }

  void parse_monad(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    std::string on;
    std::vector<const Line*> ob, mr, mu, eta;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "on") {
        expect_arity(l, 2);
        on = l.toks[1];
        need_category(on, l.num);
      } else if (k == "obj") {
        expect_arity(l, 3);
        ob.push_back(lp);
      } else if (k == "mor") {
        expect_arity(l, 3);
        mr.push_back(lp);
      } else if (k == "mu") {
        expect_arity(l, 3);
        mu.push_back(lp);
      } else if (k == "eta") {
        expect_arity(l, 3);
        eta.push_back(lp);
      } else {
        fail(l.num, "unknown line '" + k + "' in monad");
      }
    }
    if (on.empty()) fail(head, "monad " + name + ": missing on");
    const CatPtr cat = d_.categories.at(on);
    std::vector<ObjId> omap(cat->n_obj(), -1);
    std::vector<MorId> mmap(cat->n_mor(), kNoMor);
    for (const Line* lp : ob)
      omap[obj_id(on, lp->toks[1], lp->num)] = obj_id(on, lp->toks[2], lp->num);
    for (const Line* lp : mr)
      mmap[mor_id(on, lp->toks[1], lp->num)] = mor_id(on, lp->toks[2], lp->num);
    for (ObjId v : omap)
      if (v < 0) fail(head, "monad " + name + ": incomplete obj table");
    for (MorId v : mmap)
      if (v == kNoMor) fail(head, "monad " + name + ": incomplete mor table");
    std::vector<MorId> muc(cat->n_obj(), kNoMor), etac(cat->n_obj(), kNoMor);
    for (const Line* lp : mu)
      muc[obj_id(on, lp->toks[1], lp->num)] = mor_id(on, lp->toks[2], lp->num);
    for (const Line* lp : eta)
      etac[obj_id(on, lp->toks[1], lp->num)] = mor_id(on, lp->toks[2], lp->num);
    for (MorId v : muc)
      if (v == kNoMor) fail(head, "monad " + name + ": incomplete mu");
    for (MorId v : etac)
      if (v == kNoMor) fail(head, "monad " + name + ": incomplete eta");
    Functor t = make_functor(cat, cat, std::move(omap), std::move(mmap));
    NatTrans mu_n = make_nat_trans(compose_functors(t, t), t, std::move(muc));
    NatTrans eta_n = make_nat_trans(identity_functor(cat), t, std::move(etac));
    d_.monads.emplace(
        name, MonadSection{on, make_monad(std::move(t), std::move(mu_n),
                                          std::move(eta_n))});
  }

  void parse_law(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    std::string act, mon;
    std::vector<const Line*> comps;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "action") {
        expect_arity(l, 2);
        act = l.toks[1];
        if (!d_.actions.count(act)) fail(l.num, "unknown action '" + act + "'");
      } else if (k == "monad") {
        expect_arity(l, 2);
        mon = l.toks[1];
        if (!d_.monads.count(mon)) fail(l.num, "unknown monad '" + mon + "'");
      } else if (k == "component") {
        expect_arity(l, 4);
        comps.push_back(lp);
      } else {
        fail(l.num, "unknown line '" + k + "' in law");
      }
    }
    if (act.empty()) fail(head, "law " + name + ": missing action");
    if (mon.empty()) fail(head, "law " + name + ": missing monad");
    const ActionSection& as = d_.actions.at(act);
    const MonadSection& ts = d_.monads.at(mon);
    if (ts.cat_name != as.cat_name)
      fail(head, "law " + name + ": monad lives on '" + ts.cat_name +
                     "', action on '" + as.cat_name + "'");
    const std::string& mcat = as.cat_name;
    const int nc = as.action->C->base->n_obj();
    std::vector<MorId> table(
        static_cast<size_t>(as.action->M->n_obj()) * nc, kNoMor);
    const std::string ccat = find_base_of(act);
    for (const Line* lp : comps) {
      const Line& l = *lp;
      const ObjId m = obj_id(mcat, l.toks[1], l.num);
      const ObjId q = obj_id(ccat, l.toks[2], l.num);
      MorId h = kNoMor;
      if (l.toks[3] != "none") h = mor_id(mcat, l.toks[3], l.num);
      table[static_cast<size_t>(m) * nc + q] = h;
    }
    d_.laws.emplace(
        name, LawSection{act, mon,
                         make_distlaw(as.action, ts.monad, std::move(table))});
  }

  std::string find_base_of(const std::string& action_name) {
    return d_.monoidals.at(d_.actions.at(action_name).monoidal_name).base_name;
  }

  void parse_linear(const std::string& name) {
    const int head = lines_[pos_ - 1].num;
    int field_p = -1, db = -1, da = -1, dm = -1, dq = -1;
    struct RowLine {
      std::string map;
      int row;
      std::vector<std::string> entries;
      int num;
    };
    std::vector<RowLine> rows;
    for (const Line* lp : body(head)) {
      const Line& l = *lp;
      const std::string& k = l.toks[0];
      if (k == "field") {
        expect_arity(l, 2);
        field_p = static_cast<int>(parse_int(l.toks[1], l.num));
      } else if (k == "dims") {
        expect_arity(l, 5);
        db = static_cast<int>(parse_int(l.toks[1], l.num));
        da = static_cast<int>(parse_int(l.toks[2], l.num));
        dm = static_cast<int>(parse_int(l.toks[3], l.num));
        dq = static_cast<int>(parse_int(l.toks[4], l.num));
      } else {
        if (l.toks.size() < 2) fail(l.num, "matrix row needs an index");
        RowLine r;
        r.map = k;
        r.row = static_cast<int>(parse_int(l.toks[1], l.num));
        r.entries.assign(l.toks.begin() + 2, l.toks.end());
        r.num = l.num;
        rows.push_back(std::move(r));
      }
    }
    if (field_p < 0) fail(head, "linear " + name + ": missing field");
    if (db < 1 || da < 1 || dm < 1 || dq < 1)
      fail(head, "linear " + name + ": missing or bad dims");
    Field F(field_p);
    auto collect = [&](const std::string& map, int r, int c,
                       bool required) -> std::optional<LinMap> {
      LinMap m = lin_zero(r, c);
      std::vector<bool> seen(r, false);
      bool any = false;
      for (const auto& rl : rows) {
        if (rl.map != map) continue;
        any = true;
        if (rl.row < 0 || rl.row >= r)
          fail(rl.num, map + ": row index out of range");
        if (seen[rl.row]) fail(rl.num, map + ": duplicate row");
        if (static_cast<int>(rl.entries.size()) != c)
          fail(rl.num, map + ": expected " + std::to_string(c) + " entries");
        seen[rl.row] = true;
        for (int j = 0; j < c; ++j)
          m.at(rl.row, j) = parse_scalar(F, rl.entries[j], rl.num);
      }
      if (!any) {
        if (required) fail(head, "linear " + name + ": missing map " + map);
        return std::nullopt;
      }
      for (int i = 0; i < r; ++i)
        if (!seen[i]) fail(head, map + ": missing row " + std::to_string(i));
      return m;
    };
    Bialgebra B;
    B.dim = db;
    B.mult = *collect("b_mult", db, db * db, true);
    B.unit = *collect("b_unit", db, 1, true);
    B.comul = *collect("b_comul", db * db, db, true);
    B.counit = *collect("b_counit", 1, db, true);
    ModuleAlgebra A;
    A.dim = da;
    A.mult = *collect("a_mult", da, da * da, true);
    A.unit = *collect("a_unit", da, 1, true);
    A.act = *collect("a_act", da, db * da, true);
    AModule M{dm, *collect("m_act", dm, da * dm, true)};
    Comodule Q{dq, *collect("q_rho", dq * db, dq, true)};
    const int n = da * dm * dq;
    std::optional<LinMap> law = collect("law", n, n, false);
    for (const auto& rl : rows) {
      static const char* known[] = {"b_mult", "b_unit",  "b_comul",
                                    "b_counit", "a_mult", "a_unit",
                                    "a_act",  "m_act",   "q_rho",
                                    "law"};
      bool ok = false;
      for (const char* k : known) ok = ok || rl.map == k;
      if (!ok) fail(rl.num, "unknown map '" + rl.map + "' in linear");
    }
    d_.linears.emplace(
        name,
        LinearSection{LinearBundle{name, F, std::move(B), std::move(A), M, Q},
                      std::move(law)});
  }
};

void put_matrix(std::ostream& os, const Field& F, const std::string& map,
                const LinMap& m) {
  for (int i = 0; i < m.rows; ++i) {
    os << "  " << map << ' ' << i;
    for (int j = 0; j < m.cols; ++j) os << ' ' << F.to_string(m.at(i, j));
    os << '\n';
  }
}

}  // namespace

bool Declaration::has(const std::string& name) const {
  return categories.count(name) || monoidals.count(name) ||
         actions.count(name) || monads.count(name) || laws.count(name) ||
         linears.count(name);
}

Declaration parse_declaration(const std::string& text) {
  return Parser(text).run();
}

Declaration load_declaration_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_declaration(buf.str());
}

std::string serialize_declaration(const Declaration& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, name] : d.order) {
    if (!first) os << '\n';
    first = false;
    if (kind == "category") {
      const FinCategory& c = *d.categories.at(name);
      os << "category " << name << '\n';
      os << "  objects";
      for (const auto& o : c.obj_names) os << ' ' << o;
      os << '\n';
      for (int i = 0; i < c.n_mor(); ++i)
        os << "  mor " << c.mor_names[i] << ' ' << c.obj_names[c.mor_src[i]]
           << ' ' << c.obj_names[c.mor_tgt[i]] << '\n';
      for (int i = 0; i < c.n_obj(); ++i)
        os << "  identity " << c.obj_names[i] << ' '
           << c.mor_names[c.identity[i]] << '\n';
      for (int g = 0; g < c.n_mor(); ++g)
        for (int f = 0; f < c.n_mor(); ++f)
          if (c.comp_at(g, f) != kNoMor)
            os << "  compose " << c.mor_names[g] << ' ' << c.mor_names[f]
               << ' ' << c.mor_names[c.comp_at(g, f)] << '\n';
      os << "end\n";
    } else if (kind == "monoidal") {
      const MonoidalSection& s = d.monoidals.at(name);
      const MonoidalCategory& m = *s.monoidal;
      const FinCategory& c = *m.base;
      os << "monoidal " << name << '\n';
      os << "  base " << s.base_name << '\n';
      os << "  unit " << c.obj_names[m.unit] << '\n';
      if (m.strict) os << "  strict\n";
      for (int x = 0; x < c.n_obj(); ++x)
        for (int y = 0; y < c.n_obj(); ++y)
          os << "  tensor_obj " << c.obj_names[x] << ' ' << c.obj_names[y]
             << ' ' << c.obj_names[m.ten(x, y)] << '\n';
      for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g)
          os << "  tensor_mor " << c.mor_names[f] << ' ' << c.mor_names[g]
             << ' ' << c.mor_names[m.ten_m(f, g)] << '\n';
      if (!m.strict) {
        for (int x = 0; x < c.n_obj(); ++x)
          for (int y = 0; y < c.n_obj(); ++y)
            for (int z = 0; z < c.n_obj(); ++z)
              os << "  assoc " << c.obj_names[x] << ' ' << c.obj_names[y]
                 << ' ' << c.obj_names[z] << ' '
                 << c.mor_names[m.assoc_at(x, y, z)] << '\n';
        for (int x = 0; x < c.n_obj(); ++x)
          os << "  runit " << c.obj_names[x] << ' ' << c.mor_names[m.runit[x]]
             << '\n';
        for (int x = 0; x < c.n_obj(); ++x)
          os << "  lunit " << c.obj_names[x] << ' ' << c.mor_names[m.lunit[x]]
             << '\n';
      }
      os << "end\n";
    } else if (kind == "action") {
      const ActionSection& s = d.actions.at(name);
      const MonoidalAction& a = *s.action;
      const FinCategory& mc = *a.M;
      const FinCategory& cc = *a.C->base;
      os << "action " << name << '\n';
      os << "  monoidal " << s.monoidal_name << '\n';
      os << "  on " << s.cat_name << '\n';
      if (a.strict) os << "  strict\n";
      for (int m = 0; m < mc.n_obj(); ++m)
        for (int q = 0; q < cc.n_obj(); ++q)
          os << "  act_obj " << mc.obj_names[m] << ' ' << cc.obj_names[q]
             << ' ' << mc.obj_names[a.ao(m, q)] << '\n';
      for (int f = 0; f < mc.n_mor(); ++f)
        for (int g = 0; g < cc.n_mor(); ++g)
          os << "  act_mor " << mc.mor_names[f] << ' ' << cc.mor_names[g]
             << ' ' << mc.mor_names[a.am(f, g)] << '\n';
      if (!a.strict) {
        for (int m = 0; m < mc.n_obj(); ++m)
          for (int x = 0; x < cc.n_obj(); ++x)
            for (int y = 0; y < cc.n_obj(); ++y)
              os << "  psi " << mc.obj_names[m] << ' ' << cc.obj_names[x]
                 << ' ' << cc.obj_names[y] << ' '
                 << mc.mor_names[a.psi_at(m, x, y)] << '\n';
        for (int m = 0; m < mc.n_obj(); ++m)
          os << "  unit_u " << mc.obj_names[m] << ' '
             << mc.mor_names[a.unit_u[m]] << '\n';
      }
      os << "end\n";
    } else if (kind == "monad") {
      const MonadSection& s = d.monads.at(name);
      const FinCategory& c = *s.monad.base();
      os << "monad " << name << '\n';
      os << "  on " << s.cat_name << '\n';
      for (int x = 0; x < c.n_obj(); ++x)
        os << "  obj " << c.obj_names[x] << ' '
           << c.obj_names[s.monad.t_obj(x)] << '\n';
      for (int f = 0; f < c.n_mor(); ++f)
        os << "  mor " << c.mor_names[f] << ' '
           << c.mor_names[s.monad.t_mor(f)] << '\n';
      for (int x = 0; x < c.n_obj(); ++x)
        os << "  mu " << c.obj_names[x] << ' '
           << c.mor_names[s.monad.mu.component[x]] << '\n';
      for (int x = 0; x < c.n_obj(); ++x)
        os << "  eta " << c.obj_names[x] << ' '
           << c.mor_names[s.monad.eta.component[x]] << '\n';
      os << "end\n";
    } else if (kind == "law") {
      const LawSection& s = d.laws.at(name);
      const FinCategory& mc = *s.law.action->M;
      const FinCategory& cc = *s.law.action->C->base;
      os << "law " << name << '\n';
      os << "  action " << s.action_name << '\n';
      os << "  monad " << s.monad_name << '\n';
      for (int m = 0; m < mc.n_obj(); ++m)
        for (int q = 0; q < cc.n_obj(); ++q) {
          const MorId h = s.law.at(m, q);
          os << "  component " << mc.obj_names[m] << ' ' << cc.obj_names[q]
             << ' ' << (h == kNoMor ? std::string("none") : mc.mor_names[h])
             << '\n';
        }
      os << "end\n";
    } else if (kind == "linear") {
      const LinearSection& s = d.linears.at(name);
      const LinearBundle& b = s.bundle;
      const Field& F = b.field;
      os << "linear " << name << '\n';
      os << "  field " << F.characteristic() << '\n';
      os << "  dims " << b.B.dim << ' ' << b.A.dim << ' ' << b.M.dim << ' '
         << b.Q.dim << '\n';
      put_matrix(os, F, "b_mult", b.B.mult);
      put_matrix(os, F, "b_unit", b.B.unit);
      put_matrix(os, F, "b_comul", b.B.comul);
      put_matrix(os, F, "b_counit", b.B.counit);
      put_matrix(os, F, "a_mult", b.A.mult);
      put_matrix(os, F, "a_unit", b.A.unit);
      put_matrix(os, F, "a_act", b.A.act);
      put_matrix(os, F, "m_act", b.M.act);
      put_matrix(os, F, "q_rho", b.Q.rho);
      if (s.law) put_matrix(os, F, "law", *s.law);
      os << "end\n";
    }
  }
  return os.str();
}

void save_declaration_file(const Declaration& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << serialize_declaration(d);
}

void add_category(Declaration& d, const std::string& name, CatPtr cat) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.categories.emplace(name, std::move(cat));
  d.order.emplace_back("category", name);
}

void add_monoidal(Declaration& d, const std::string& name,
                  const std::string& base, MonoidalPtr m) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.monoidals.emplace(name, MonoidalSection{base, std::move(m)});
  d.order.emplace_back("monoidal", name);
}

void add_action(Declaration& d, const std::string& name,
                const std::string& monoidal, const std::string& cat,
                ActionPtr a) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.actions.emplace(name, ActionSection{monoidal, cat, std::move(a)});
  d.order.emplace_back("action", name);
}

void add_monad(Declaration& d, const std::string& name, const std::string& cat,
               Monad t) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.monads.emplace(name, MonadSection{cat, std::move(t)});
  d.order.emplace_back("monad", name);
}

void add_law(Declaration& d, const std::string& name, const std::string& action,
             const std::string& monad, DistributiveLaw l) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.laws.emplace(name, LawSection{action, monad, std::move(l)});
  d.order.emplace_back("law", name);
}

void add_linear(Declaration& d, const std::string& name, LinearSection s) {
  if (d.has(name)) throw MalformedInput("duplicate section '" + name + "'");
  d.linears.emplace(name, std::move(s));
  d.order.emplace_back("linear", name);
}

}  // namespace catlift
