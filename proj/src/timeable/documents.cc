// Copyright 2026 The Timeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "timeable/documents.h"

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"

namespace timeable {
namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0,
                                                  text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    Fail(ErrorCode::kParse, "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what);
  }
}

[[noreturn]] void Bad(const std::string& path, const std::string& what) {
  Fail(ErrorCode::kParse, path + ": " + what);
}

const Json& Field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) Bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Bad(path, "missing field \"" + key + "\"");
  return *it;
}

const Json* OptionalField(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& Array(const Json& j, const std::string& path) {
  if (!j.is_array()) Bad(path, "expected a list");
  return j;
}

std::string String(const Json& j, const std::string& path) {
  if (!j.is_string()) Bad(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t Integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const Rational q = ParseRational(j.get<std::string>());
    if (IsInteger(q) && q.get_num().fits_slong_p()) {
      return q.get_num().get_si();
    }
  }
  Bad(path, "expected an integer");
}

Rational RationalField(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  if (!j.is_string()) Bad(path, "expected a rational string such as \"1/2\"");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const Error& e) {
    Bad(path, e.what());
  }
}

Json RationalJson(const Rational& q) { return FormatRational(q); }

Json TupleJson(const Outcome& x) {
  Json out = Json::array();
  for (const Rational& q : x) out.push_back(RationalJson(q));
  return out;
}

Outcome TupleField(const Json& j, const std::string& path) {
  Outcome out;
  const Json& list = Array(j, path);
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(RationalField(list[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string Fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string Emit(const Json& j) { return j.dump(2) + "\n"; }

void CheckDigest(const Json& doc, const std::string& key,
                 const std::string& expected) {
  if (const Json* d = OptionalField(doc, key)) {
    if (String(*d, key) != expected) {
      Fail(ErrorCode::kInvalid, "document was made for a different " + key +
                                    " (digest mismatch)");
    }
  }
}

std::string KindText(NodeKind kind) { return std::string(KindName(kind)); }

Json GameJson(const Game& game) {
  Json doc;
  doc["players"] = game.spec().players;
  Json nodes = Json::array();
  for (const Node& node : game.spec().nodes) {
    Json n;
    n["id"] = node.id;
    n["kind"] = KindText(node.kind);
    if (node.kind == NodeKind::kDecision) {
      n["player"] = node.player;
      n["infoset"] = node.infoset;
    }
    if (!node.children.empty()) {
      Json children = Json::array();
      for (const Edge& e : node.children) {
        Json c;
        c["node"] = game.node(e.child).id;
        c["action"] = e.action;
        if (e.prob) c["prob"] = RationalJson(*e.prob);
        children.push_back(std::move(c));
      }
      n["children"] = std::move(children);
    }
    if (node.kind == NodeKind::kLeaf) n["payoffs"] = TupleJson(node.payoffs);
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);
  doc["root"] = game.node(game.root()).id;
  return doc;
}

NodeIndex NodeById(const Game& game, const std::string& key,
                   const std::string& path) {
  std::int64_t id = 0;
  try {
    std::size_t used = 0;
    id = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    Bad(path, "node key \"" + key + "\" is not an integer id");
  }
  const NodeIndex v = game.FindNode(id);
  if (v == kNoNode) Bad(path, "unknown node id " + key);
  return v;
}

DeterministicTiming TimesField(const Game& game, const Json& times,
                               const std::string& path) {
  if (!times.is_object()) Bad(path, "expected a map from node id to time");
  DeterministicTiming t;
  t.times.assign(game.num_nodes(), Rational(0));
  std::vector<char> seen(game.num_nodes(), 0);
  for (const auto& [key, value] : times.items()) {
    const NodeIndex v = NodeById(game, key, path);
    t.times[v] = RationalField(value, path + "." + key);
    seen[v] = 1;
  }
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    if (!seen[v]) {
      Bad(path, "no time for node " + std::to_string(game.node(v).id));
    }
  }
  return t;
}

Json TimesJson(const Game& game, const DeterministicTiming& t) {
  Json times = Json::object();
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    times[std::to_string(game.node(v).id)] = RationalJson(t.times[v]);
  }
  return times;
}

std::string NodeName(const Game& game, NodeIndex v) {
  return v == kNoNode ? "" : std::to_string(game.node(v).id);
}

}  // namespace

GameSpec ParseGameSpec(std::string_view text) {
  const Json doc = ParseJson(text);
  GameSpec spec;
  const Json& players = Array(Field(doc, "players", "game"), "players");
  for (std::size_t i = 0; i < players.size(); ++i) {
    spec.players.push_back(
        String(players[i], "players[" + std::to_string(i) + "]"));
  }
  const Json& nodes = Array(Field(doc, "nodes", "game"), "nodes");
  std::map<std::int64_t, NodeIndex> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "nodes[" + std::to_string(i) + "]";
    const std::int64_t id = Integer(Field(nodes[i], "id", path), path + ".id");
    if (id < 0) Bad(path + ".id", "ids must be non-negative");
    if (!index.emplace(id, static_cast<NodeIndex>(i)).second) {
      Bad(path + ".id", "duplicate id " + std::to_string(id));
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "nodes[" + std::to_string(i) + "]";
    const Json& j = nodes[i];
    Node node;
    node.id = Integer(j["id"], path + ".id");
    const std::string kind = String(Field(j, "kind", path), path + ".kind");
    if (kind == "chance") {
      node.kind = NodeKind::kChance;
    } else if (kind == "decision") {
      node.kind = NodeKind::kDecision;
    } else if (kind == "leaf") {
      node.kind = NodeKind::kLeaf;
    } else {
      Bad(path + ".kind", "unknown kind \"" + kind + "\"");
    }
    if (const Json* p = OptionalField(j, "player")) {
      node.player = static_cast<int>(Integer(*p, path + ".player"));
      if (node.player < 1) Bad(path + ".player", "players are 1-based");
    }
    if (const Json* s = OptionalField(j, "infoset")) {
      node.infoset = String(*s, path + ".infoset");
      if (node.infoset.empty()) Bad(path + ".infoset", "empty infoset id");
    }
    if (const Json* children = OptionalField(j, "children")) {
      Array(*children, path + ".children");
      for (std::size_t k = 0; k < children->size(); ++k) {
        const std::string cpath =
            path + ".children[" + std::to_string(k) + "]";
        const Json& c = (*children)[k];
        Edge e;
        const std::int64_t target =
            Integer(Field(c, "node", cpath), cpath + ".node");
        auto it = index.find(target);
        if (it == index.end()) {
          Bad(cpath + ".node", "unknown node id " + std::to_string(target));
        }
        e.child = it->second;
        if (const Json* a = OptionalField(c, "action")) {
          e.action = String(*a, cpath + ".action");
        } else {
          e.action = std::to_string(k);
        }
        if (const Json* p = OptionalField(c, "prob")) {
          e.prob = RationalField(*p, cpath + ".prob");
        }
        node.children.push_back(std::move(e));
      }
    }
    if (const Json* payoffs = OptionalField(j, "payoffs")) {
      node.payoffs = TupleField(*payoffs, path + ".payoffs");
    }
    spec.nodes.push_back(std::move(node));
  }
  const std::int64_t root = Integer(Field(doc, "root", "game"), "root");
  auto it = index.find(root);
  if (it == index.end()) Bad("root", "unknown node id " + std::to_string(root));
  spec.root = it->second;
  return spec;
}

Game ParseGame(std::string_view text) { return Game::Build(ParseGameSpec(text)); }

std::string SerializeGame(const Game& game) { return Emit(GameJson(game)); }

std::string GameDigest(const Game& game) { return Fnv1a(GameJson(game).dump()); }

DeterministicTiming ParseTiming(const Game& game, std::string_view text) {
  const Json doc = ParseJson(text);
  CheckDigest(doc, "game", GameDigest(game));
  return TimesField(game, Field(doc, "times", "timing"), "times");
}

std::string SerializeTiming(const Game& game, const DeterministicTiming& t) {
  Json doc;
  doc["game"] = GameDigest(game);
  doc["times"] = TimesJson(game, t);
  return Emit(doc);
}

RandomizedTiming ParseRandomizedTiming(const Game& game,
                                       std::string_view text) {
  const Json doc = ParseJson(text);
  CheckDigest(doc, "game", GameDigest(game));
  RandomizedTiming rt;
  if (const Json* times = OptionalField(doc, "times")) {
    rt.atoms.push_back({Rational(1), TimesField(game, *times, "times")});
    return rt;
  }
  const Json& atoms = Array(Field(doc, "atoms", "timing"), "atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::string path = "atoms[" + std::to_string(a) + "]";
    rt.atoms.push_back(
        {RationalField(Field(atoms[a], "prob", path), path + ".prob"),
         TimesField(game, Field(atoms[a], "times", path), path + ".times")});
  }
  return rt;
}

std::string SerializeRandomizedTiming(const Game& game,
                                      const RandomizedTiming& rt) {
  Json doc;
  doc["game"] = GameDigest(game);
  Json atoms = Json::array();
  for (const TimingAtom& atom : rt.atoms) {
    Json a;
    a["prob"] = RationalJson(atom.prob);
    a["times"] = TimesJson(game, atom.timing);
    atoms.push_back(std::move(a));
  }
  doc["atoms"] = std::move(atoms);
  return Emit(doc);
}

namespace {

ProbabilityMap DistributionEntries(const Json& list, const std::string& path) {
  Array(list, path);
  ProbabilityMap probs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    Outcome x = TupleField(Field(list[i], "outcome", p), p + ".outcome");
    probs[std::move(x)] += RationalField(Field(list[i], "prob", p), p + ".prob");
  }
  return probs;
}

Json DistributionEntriesJson(const Distribution& d) {
  Json list = Json::array();
  for (const auto& [x, p] : d.support()) {
    Json e;
    e["outcome"] = TupleJson(x);
    e["prob"] = RationalJson(p);
    list.push_back(std::move(e));
  }
  return list;
}

}  // namespace

Distribution ParseDistribution(std::string_view text) {
  return Distribution::FromMap(DistributionEntries(ParseJson(text), "distribution"));
}

std::string SerializeDistribution(const Distribution& d) {
  return Emit(DistributionEntriesJson(d));
}

ChainDistribution ParseChain(std::string_view text) {
  const Json doc = ParseJson(text);
  if (doc.is_array()) {
    return ChainDistribution::FromDistribution(
        Distribution::FromMap(DistributionEntries(doc, "chain")));
  }
  const Rational spread = RationalField(Field(doc, "spread", "chain"), "spread");
  if (!IsInteger(spread)) Bad("spread", "expected an integer");
  return ChainDistribution::Create(
      Distribution::FromMap(
          DistributionEntries(Field(doc, "offsets", "chain"), "offsets")),
      spread.get_num());
}

std::string SerializeChain(const ChainDistribution& cd) {
  if (cd.spread() == 1) return SerializeDistribution(cd.offsets());
  Json doc;
  doc["offsets"] = DistributionEntriesJson(cd.offsets());
  doc["spread"] = cd.spread().get_str();
  return Emit(doc);
}

BehaviorProfile ParseProfile(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) Bad("profile", "expected a map from infoset id");
  BehaviorProfile profile;
  for (const auto& [key, value] : doc.items()) {
    profile[key] = TupleField(value, "profile." + key);
  }
  return profile;
}

std::string SerializeProfile(const BehaviorProfile& profile) {
  Json doc = Json::object();
  for (const auto& [name, sigma] : profile) doc[name] = TupleJson(sigma);
  return Emit(doc);
}

namespace {

Json AgendaJson(const Agenda& agenda) {
  Json doc;
  doc["n"] = agenda.n;
  Json seq = Json::array();
  for (int s : agenda.seq) {
    if (s == kSeparator) {
      seq.push_back("|");
    } else {
      seq.push_back(s);
    }
  }
  doc["seq"] = std::move(seq);
  return doc;
}

}  // namespace

Agenda ParseAgenda(std::string_view text) {
  const Json doc = ParseJson(text);
  const std::int64_t n = Integer(Field(doc, "n", "agenda"), "n");
  if (n < 0 || n > 1'000'000) Bad("n", "player count out of range");
  std::vector<int> seq;
  const Json& list = Array(Field(doc, "seq", "agenda"), "seq");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "seq[" + std::to_string(i) + "]";
    if (list[i].is_string() && list[i].get<std::string>() == "|") {
      seq.push_back(kSeparator);
      continue;
    }
    const std::int64_t p = Integer(list[i], path);
    if (p < 1 || p > n) Bad(path, "player out of range");
    seq.push_back(static_cast<int>(p));
  }
  return MakeAgenda(static_cast<int>(n), std::move(seq));
}

std::string SerializeAgenda(const Agenda& agenda) {
  return Emit(AgendaJson(agenda));
}

std::string AgendaDigest(const Agenda& agenda) {
  return Fnv1a(AgendaJson(agenda).dump());
}

SymmetricChoicelessGame ParseChoiceless(std::string_view text) {
  const Json doc = ParseJson(text);
  SymmetricChoicelessGame scg;
  const std::int64_t n = Integer(Field(doc, "n", "game"), "n");
  if (n < 1 || n > 1'000'000) Bad("n", "player count out of range");
  scg.n = static_cast<int>(n);
  const Json& list = Array(Field(doc, "seq", "game"), "seq");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::int64_t p = Integer(list[i], "seq[" + std::to_string(i) + "]");
    if (p < 1 || p > n) Bad("seq[" + std::to_string(i) + "]", "player out of range");
    scg.seq.push_back(static_cast<int>(p));
  }
  if (scg.seq.empty()) Bad("seq", "empty sequence");
  return scg;
}

std::string SerializeChoiceless(const SymmetricChoicelessGame& scg) {
  Json doc;
  doc["n"] = scg.n;
  doc["seq"] = scg.seq;
  return Emit(doc);
}

AgendaTiming ParseAgendaTiming(const Agenda& agenda, std::string_view text) {
  const Json doc = ParseJson(text);
  CheckDigest(doc, "agenda", AgendaDigest(agenda));
  AgendaTiming t;
  const Json& atoms = Array(Field(doc, "atoms", "agenda timing"), "atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::string path = "atoms[" + std::to_string(a) + "]";
    AgendaAtom atom;
    atom.prob = RationalField(Field(atoms[a], "prob", path), path + ".prob");
    atom.sep_times = TupleField(Field(atoms[a], "sep_times", path),
                                path + ".sep_times");
    atom.player_times.resize(agenda.n);
    const Json& players = Field(atoms[a], "player_times", path);
    if (!players.is_object()) Bad(path + ".player_times", "expected a map");
    for (const auto& [key, value] : players.items()) {
      const std::string ppath = path + ".player_times." + key;
      const std::int64_t p = Integer(Json(key), ppath);
      if (p < 1 || p > agenda.n) Bad(ppath, "player out of range");
      atom.player_times[p - 1] = TupleField(value, ppath);
    }
    t.atoms.push_back(std::move(atom));
  }
  return t;
}

std::string SerializeAgendaTiming(const Agenda& agenda,
                                  const AgendaTiming& t) {
  Json doc;
  doc["agenda"] = AgendaDigest(agenda);
  Json atoms = Json::array();
  for (const AgendaAtom& atom : t.atoms) {
    Json a;
    a["prob"] = RationalJson(atom.prob);
    a["sep_times"] = TupleJson(atom.sep_times);
    Json players = Json::object();
    for (std::size_t p = 0; p < atom.player_times.size(); ++p) {
      players[std::to_string(p + 1)] = TupleJson(atom.player_times[p]);
    }
    a["player_times"] = std::move(players);
    atoms.push_back(std::move(a));
  }
  doc["atoms"] = std::move(atoms);
  return Emit(doc);
}

SymmetricGameTiming ParseSymmetricTiming(std::string_view text) {
  const Json doc = ParseJson(text);
  SymmetricGameTiming t;
  const Json& atoms = Array(Field(doc, "atoms", "timing"), "atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::string path = "atoms[" + std::to_string(a) + "]";
    SymmetricAtom atom;
    atom.prob = RationalField(Field(atoms[a], "prob", path), path + ".prob");
    const Json& rows = Array(Field(atoms[a], "rows", path), path + ".rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      atom.rows.push_back(
          TupleField(rows[r], path + ".rows[" + std::to_string(r) + "]"));
    }
    t.atoms.push_back(std::move(atom));
  }
  return t;
}

std::string SerializeSymmetricTiming(const SymmetricGameTiming& t) {
  Json doc;
  Json atoms = Json::array();
  for (const SymmetricAtom& atom : t.atoms) {
    Json a;
    a["prob"] = RationalJson(atom.prob);
    Json rows = Json::array();
    for (const auto& row : atom.rows) rows.push_back(TupleJson(row));
    a["rows"] = std::move(rows);
    atoms.push_back(std::move(a));
  }
  doc["atoms"] = std::move(atoms);
  return Emit(doc);
}

PerceivedTiming ParsePerceivedTiming(const Game& game, std::string_view text) {
  const Json doc = ParseJson(text);
  CheckDigest(doc, "game", GameDigest(game));
  PerceivedTiming pt;
  const Json& atoms = Array(Field(doc, "atoms", "timing"), "atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const std::string path = "atoms[" + std::to_string(a) + "]";
    PerceivedAtom atom;
    atom.prob = RationalField(Field(atoms[a], "prob", path), path + ".prob");
    atom.xy.resize(game.num_nodes());
    std::vector<char> seen(game.num_nodes(), 0);
    const Json& xy = Field(atoms[a], "xy", path);
    if (!xy.is_object()) Bad(path + ".xy", "expected a map");
    for (const auto& [key, value] : xy.items()) {
      const std::string vpath = path + ".xy." + key;
      const NodeIndex v = NodeById(game, key, vpath);
      const Outcome pair = TupleField(value, vpath);
      if (pair.size() != 2) Bad(vpath, "expected [x, y]");
      atom.xy[v] = {pair[0], pair[1]};
      seen[v] = 1;
    }
    for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
      if (!seen[v]) {
        Bad(path + ".xy", "no entry for node " +
                              std::to_string(game.node(v).id));
      }
    }
    pt.atoms.push_back(std::move(atom));
  }
  return pt;
}

std::string SerializePerceivedTiming(const Game& game,
                                     const PerceivedTiming& pt) {
  Json doc;
  doc["game"] = GameDigest(game);
  Json atoms = Json::array();
  for (const PerceivedAtom& atom : pt.atoms) {
    Json a;
    a["prob"] = RationalJson(atom.prob);
    Json xy = Json::object();
    for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
      xy[std::to_string(game.node(v).id)] =
          Json::array({RationalJson(atom.xy[v].first),
                       RationalJson(atom.xy[v].second)});
    }
    a["xy"] = std::move(xy);
    atoms.push_back(std::move(a));
  }
  doc["atoms"] = std::move(atoms);
  return Emit(doc);
}

std::string ValidationJson(const Game& game, const ValidationReport& report) {
  Json doc;
  doc["tree"] = report.tree_ok;
  doc["kinds"] = report.kinds_ok;
  doc["chance"] = report.chance_ok;
  doc["infosets"] = report.infosets_ok;
  doc["payoff_lengths"] = report.payoff_lengths_ok;
  doc["perfect_recall"] = report.perfect_recall;
  Json recall = Json::array();
  for (bool b : report.player_recall) recall.push_back(b);
  doc["player_recall"] = std::move(recall);
  doc["payoffs_in_unit_interval"] = report.payoffs_in_unit_interval;
  doc["max_nodes_per_history"] = report.max_nodes_per_history;
  doc["issues"] = report.issues;
  doc["num_nodes"] = game.num_nodes();
  doc["num_infosets"] = game.num_infosets();
  return Emit(doc);
}

std::string EpsilonJson(const Game& game, const EpsilonReport& report) {
  Json doc;
  doc["achieved"] = RationalJson(report.achieved);
  if (report.infoset >= 0) {
    doc["infoset"] = game.infoset_name(report.infoset);
    doc["nodes"] = Json::array(
        {NodeName(game, report.node_a), NodeName(game, report.node_b)});
  }
  return Emit(doc);
}

std::string EstimateJson(const Game& game, const EstimateReport& report) {
  Json doc;
  doc["estimate"] = report.estimate;
  doc["standard_error"] = report.standard_error;
  doc["plug_in"] = report.plug_in;
  doc["samples"] = report.samples;
  if (report.infoset >= 0) {
    doc["infoset"] = game.infoset_name(report.infoset);
    doc["nodes"] = Json::array(
        {NodeName(game, report.node_a), NodeName(game, report.node_b)});
  }
  return Emit(doc);
}

std::string AdvantageJson(const AdvantageReport& report) {
  Json doc;
  doc["plain"] = RationalJson(report.plain);
  doc["augmented"] = RationalJson(report.augmented);
  doc["gain"] = RationalJson(report.gain);
  doc["achieved"] = RationalJson(report.achieved);
  doc["max_nodes"] = report.max_nodes;
  doc["bound"] = RationalJson(report.bound);
  doc["holds"] = report.holds;
  return Emit(doc);
}

std::string AgendaReportJson(const AgendaReport& report) {
  Json doc;
  Json reqs = Json::array();
  for (bool b : report.requirement) reqs.push_back(b);
  doc["requirements"] = std::move(reqs);
  doc["max_tv"] = RationalJson(report.max_tv);
  if (report.player_a > 0) {
    doc["players"] = Json::array({report.player_a, report.player_b});
  }
  doc["issues"] = report.issues;
  doc["verdict"] = report.verdict;
  return Emit(doc);
}

std::string LuReportJson(const Game& game, const LuReport& report) {
  Json doc;
  doc["structural"] = report.structural_ok;
  if (!report.structural_ok) doc["violation"] = report.violation;
  doc["achieved"] = RationalJson(report.achieved);
  if (report.infoset >= 0) {
    doc["infoset"] = game.infoset_name(report.infoset);
    doc["nodes"] = Json::array(
        {NodeName(game, report.node_a), NodeName(game, report.node_b)});
  }
  return Emit(doc);
}

}  // namespace timeable
