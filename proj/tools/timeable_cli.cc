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

// Command-line front end over the C API. Exit status 0 means success or an
// affirmative verdict, 1 a negative verdict, 2 a usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "timeable/timeable.h"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owned C string from the library.
using CString = std::unique_ptr<char, decltype(&tmb_string_free)>;
CString Owned(char* s) { return CString(s, &tmb_string_free); }

using GameHandle = std::unique_ptr<tmb_game, decltype(&tmb_game_free)>;

struct Globals {
  std::uint64_t budget = TMB_DEFAULT_BUDGET;
  std::uint64_t seed = 0;
  bool json = false;
};

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// Maps a library status to an exit code, reporting errors on stderr.
int Finish(tmb_status status) {
  if (status == TMB_OK) return 0;
  if (status == TMB_NEGATIVE) return 1;
  std::cerr << "error: " << tmb_last_error() << "\n";
  return kUsageError;
}

bool Failed(tmb_status status) {
  return status != TMB_OK && status != TMB_NEGATIVE;
}

GameHandle LoadGame(const std::string& path) {
  const std::string text = ReadFile(path);
  tmb_game* game = nullptr;
  if (tmb_game_parse(text.c_str(), &game) != TMB_OK) {
    throw UsageError(path + ": " + tmb_last_error());
  }
  return GameHandle(game, &tmb_game_free);
}

std::string Scalar(const nlohmann::ordered_json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

// One "key: value" line per member, or the raw document with --json.
void PrintReport(const Globals& g, const char* report) {
  if (g.json) {
    std::cout << report;
    return;
  }
  const auto doc = nlohmann::ordered_json::parse(report);
  for (const auto& [key, value] : doc.items()) {
    std::cout << key << ": " << Scalar(value) << "\n";
  }
}

const char* OrNull(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

std::string CycleLine(const nlohmann::ordered_json& cycle) {
  std::string out = "[";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += cycle[i].get<std::string>();
  }
  return out + "]";
}

void WriteDot(const tmb_game* game, const std::string& path) {
  char* dot = nullptr;
  const tmb_status status = tmb_dot(game, &dot);
  if (Failed(status)) throw UsageError(tmb_last_error());
  WriteOut(path, Owned(dot).get());
}

int RunCheck(const Globals& g, const std::string& path,
             const std::string& dot) {
  GameHandle game = LoadGame(path);
  char* raw = nullptr;
  const tmb_status status = tmb_check(game.get(), &raw);
  if (Failed(status)) return Finish(status);
  CString report = Owned(raw);
  if (!dot.empty()) WriteDot(game.get(), dot);
  if (g.json) {
    std::cout << report.get();
    return Finish(status);
  }
  const auto doc = nlohmann::ordered_json::parse(report.get());
  if (status == TMB_OK) {
    std::cout << "exactly timeable (" << doc["vertices"].get<int>()
              << " vertices, " << doc["edges"].get<int>() << " edges)\n";
  } else {
    std::cout << "not exactly timeable: cycle " << CycleLine(doc["cycle"])
              << "\n";
  }
  return Finish(status);
}

int RunExactTime(const std::string& path, const std::string& out,
                 const std::string& dot) {
  GameHandle game = LoadGame(path);
  char* raw = nullptr;
  const tmb_status status = tmb_check(game.get(), &raw);
  if (Failed(status)) return Finish(status);
  const auto doc = nlohmann::ordered_json::parse(Owned(raw).get());
  if (!dot.empty()) WriteDot(game.get(), dot);
  if (status == TMB_NEGATIVE) {
    std::cout << "not exactly timeable: cycle " << CycleLine(doc["cycle"])
              << "\n";
    return 1;
  }
  WriteOut(out, doc["timing"].dump(2) + "\n");
  return 0;
}

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

struct EpsTimeArgs {
  std::string game;
  std::optional<int> window;
  std::optional<std::string> delay;
  std::optional<std::string> chain;
  std::optional<std::string> indist;
  std::string out;
  std::string chain_out;
};

int RunEpsTime(const Globals& g, const EpsTimeArgs& a) {
  GameHandle game = LoadGame(a.game);
  char* timing = nullptr;
  tmb_status status;
  if (a.window) {
    status = tmb_window_timing(game.get(), *a.window, &timing);
  } else if (a.delay) {
    status = tmb_delay_timing(game.get(), a.delay->c_str(), &timing);
  } else {
    std::string chain_text;
    if (a.chain) {
      chain_text = ReadFile(*a.chain);
    } else {
      const std::vector<std::string> parts = SplitCommas(*a.indist);
      if (parts.size() < 2) throw UsageError("--indist expects N,K[,B...]");
      int n = 0, k = 0;
      try {
        n = std::stoi(parts[0]);
        k = std::stoi(parts[1]);
      } catch (const std::exception&) {
        throw UsageError("--indist expects integers N,K");
      }
      std::vector<const char*> spreads;
      for (std::size_t i = 2; i < parts.size(); ++i) {
        spreads.push_back(parts[i].c_str());
      }
      char* chain = nullptr;
      const tmb_status s = tmb_indist_chain(n, k, spreads.data(),
                                            spreads.size(), g.budget, &chain);
      if (s != TMB_OK) return Finish(s);
      chain_text = Owned(chain).get();
      if (!a.chain_out.empty()) WriteOut(a.chain_out, chain_text);
    }
    status = tmb_chain_timing(game.get(), chain_text.c_str(), g.budget,
                              &timing);
  }
  if (status != TMB_OK) return Finish(status);
  WriteOut(a.out, Owned(timing).get());
  return 0;
}

int RunVerifyTiming(const Globals& g, const std::string& game_path,
                    const std::string& timing_path,
                    const std::optional<std::string>& eps,
                    std::uint64_t samples, bool is_chain) {
  GameHandle game = LoadGame(game_path);
  const std::string timing = ReadFile(timing_path);
  char* report = nullptr;
  tmb_status status;
  if (samples > 0 || is_chain) {
    status = tmb_estimate_timing(game.get(), timing.c_str(), is_chain, g.seed,
                                 samples > 0 ? samples : 100000, &report);
  } else {
    status = tmb_verify_timing(game.get(), timing.c_str(), OrNull(eps),
                               g.budget, &report);
  }
  if (Failed(status)) return Finish(status);
  PrintReport(g, Owned(report).get());
  return Finish(status);
}

int RunTv(const Globals& g, const std::vector<std::string>& files,
          std::optional<int> subsets) {
  char* out = nullptr;
  tmb_status status;
  if (subsets) {
    if (files.size() != 1) throw UsageError("tv --subsets takes one chain");
    status = tmb_subset_tv(ReadFile(files[0]).c_str(), *subsets, &out);
    if (status != TMB_OK) return Finish(status);
    PrintReport(g, Owned(out).get());
    return 0;
  }
  if (files.size() != 2) throw UsageError("tv takes two distributions");
  status = tmb_tv(ReadFile(files[0]).c_str(), ReadFile(files[1]).c_str(), &out);
  if (status != TMB_OK) return Finish(status);
  CString value = Owned(out);
  if (g.json) {
    std::cout << nlohmann::ordered_json{{"tv", value.get()}}.dump(2) << "\n";
  } else {
    std::cout << value.get() << "\n";
  }
  return 0;
}

int RunAugment(const Globals& g, const std::string& game_path,
               const std::string& timing_path, const std::string& out) {
  GameHandle game = LoadGame(game_path);
  char* augmented = nullptr;
  const tmb_status status = tmb_augment(
      game.get(), ReadFile(timing_path).c_str(), g.budget, &augmented);
  if (status != TMB_OK) return Finish(status);
  WriteOut(out, Owned(augmented).get());
  return 0;
}

int RunAdvantage(const Globals& g, const std::string& game_path,
                 const std::string& timing_path, int player,
                 const std::optional<std::string>& profile_path) {
  GameHandle game = LoadGame(game_path);
  std::optional<std::string> profile;
  if (profile_path) profile = ReadFile(*profile_path);
  char* report = nullptr;
  const tmb_status status =
      tmb_advantage(game.get(), ReadFile(timing_path).c_str(), player,
                    OrNull(profile), g.budget, &report);
  if (Failed(status)) return Finish(status);
  PrintReport(g, Owned(report).get());
  return Finish(status);
}

struct FamilyArgs {
  std::string kind;
  std::optional<int> r, c, m, k;
  std::optional<std::string> variant, seq;
  bool expand = false;
  std::string out;
};

int RunFamily(const Globals& g, const FamilyArgs& a) {
  std::vector<int> params;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("--kind " + a.kind + " requires " + flag);
    params.push_back(*v);
  };
  if (a.kind == "figure1") {
    if (!a.variant || a.variant->size() != 1 || (*a.variant)[0] < 'a' ||
        (*a.variant)[0] > 'c') {
      throw UsageError("--kind figure1 requires --variant a|b|c");
    }
    params.push_back((*a.variant)[0] - 'a');
  } else if (a.kind == "guessing") {
    need(a.m, "--m");
    need(a.k, "--k");
  } else if (a.kind == "agenda-ar" || a.kind == "gamma-r") {
    need(a.r, "--r");
  } else if (a.kind == "perception") {
    need(a.c, "--c");
  } else if (a.kind == "choiceless") {
    if (!a.seq) throw UsageError("--kind choiceless requires --seq");
    const std::vector<std::string> parts =
        a.seq->find(',') != std::string::npos ? SplitCommas(*a.seq)
                                               : std::vector<std::string>{};
    if (parts.empty()) {
      for (char ch : *a.seq) {
        if (ch < '1' || ch > '9') throw UsageError("--seq expects digits");
        params.push_back(ch - '0');
      }
    } else {
      for (const std::string& p : parts) {
        try {
          params.push_back(std::stoi(p));
        } catch (const std::exception&) {
          throw UsageError("--seq expects integers");
        }
      }
    }
  } else {
    throw UsageError("unknown --kind " + a.kind);
  }
  char* doc = nullptr;
  char* text = nullptr;
  tmb_status status =
      tmb_family(a.kind.c_str(), params.data(), params.size(), &doc, &text);
  if (status != TMB_OK) return Finish(status);
  CString document = Owned(doc);
  CString line = Owned(text);
  if (a.expand) {
    if (a.kind != "choiceless" && a.kind != "gamma-r") {
      throw UsageError("--expand applies to choiceless families");
    }
    char* game = nullptr;
    status = tmb_expand_choiceless(document.get(), 0, &game);
    if (status != TMB_OK) return Finish(status);
    WriteOut(a.out, Owned(game).get());
    return 0;
  }
  if (line && !g.json && a.out.empty()) {
    std::cout << line.get() << "\n";
  } else {
    WriteOut(a.out, document.get());
    if (line && !a.out.empty() && !g.json) std::cout << line.get() << "\n";
  }
  return 0;
}

struct AgendaArgs {
  std::string agenda, timing;
  std::string eps, lambda;
  std::optional<std::string> shift;
  std::optional<int> gap_ratios;
  std::string out;
};

int RunVerifyAgenda(const Globals& g, const AgendaArgs& a) {
  const std::string agenda = ReadFile(a.agenda);
  const std::string timing = ReadFile(a.timing);
  char* out = nullptr;
  if (a.shift) {
    const tmb_status status =
        tmb_shift_agenda(agenda.c_str(), timing.c_str(), a.lambda.c_str(),
                         a.shift->c_str(), &out);
    if (status != TMB_OK) return Finish(status);
    WriteOut(a.out, Owned(out).get());
    return 0;
  }
  if (a.gap_ratios) {
    const tmb_status status =
        tmb_gap_ratios(agenda.c_str(), timing.c_str(), *a.gap_ratios, &out);
    if (status != TMB_OK) return Finish(status);
    PrintReport(g, Owned(out).get());
    return 0;
  }
  const tmb_status status = tmb_verify_agenda(
      agenda.c_str(), timing.c_str(), a.eps.c_str(), a.lambda.c_str(), &out);
  if (Failed(status)) return Finish(status);
  PrintReport(g, Owned(out).get());
  return Finish(status);
}

int RunSymmetrize(const Globals& g, const std::string& game_path,
                  const std::string& timing_path, const std::string& out) {
  char* symmetric = nullptr;
  char* report = nullptr;
  const tmb_status status =
      tmb_symmetrize(ReadFile(game_path).c_str(),
                     ReadFile(timing_path).c_str(), 0, &symmetric, &report);
  if (status != TMB_OK) return Finish(status);
  CString doc = Owned(symmetric);
  CString summary = Owned(report);
  WriteOut(out, doc.get());
  if (!out.empty() && out != "-") PrintReport(g, summary.get());
  return 0;
}

int RunLuTime(const std::string& game_path, const std::string& lower,
              const std::string& upper, const std::string& out) {
  GameHandle game = LoadGame(game_path);
  char* timing = nullptr;
  const tmb_status status =
      tmb_lu_time(game.get(), lower.c_str(), upper.c_str(), &timing);
  if (status != TMB_OK) return Finish(status);
  WriteOut(out, Owned(timing).get());
  return 0;
}

int RunVerifyLu(const Globals& g, const std::string& game_path,
                const std::string& timing_path, const std::string& lower,
                const std::string& upper,
                const std::optional<std::string>& eps) {
  GameHandle game = LoadGame(game_path);
  char* report = nullptr;
  const tmb_status status =
      tmb_verify_lu(game.get(), ReadFile(timing_path).c_str(), lower.c_str(),
                    upper.c_str(), OrNull(eps), g.budget, &report);
  if (Failed(status)) return Finish(status);
  PrintReport(g, Owned(report).get());
  return Finish(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timeability of extensive-form games"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Cap on enumerated support sizes")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampling estimators");
  app.add_flag("--json", g.json, "Print reports as JSON");
  app.set_version_flag("--version", tmb_version());

  std::string game, timing, out, dot;
  std::optional<std::string> eps;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Decide exact timeability");
  check->add_option("game", game, "Game document")->required();
  check->add_option("--dot", dot, "Write a DOT rendering");
  check->callback([&] { action = [&] { return RunCheck(g, game, dot); }; });

  auto* exact = app.add_subcommand("exact-time", "Emit an exact timing");
  exact->add_option("game", game, "Game document")->required();
  exact->add_option("-o,--output", out, "Output path");
  exact->add_option("--dot", dot, "Write a DOT rendering");
  exact->callback([&] { action = [&] { return RunExactTime(game, out, dot); }; });

  EpsTimeArgs eps_args;
  auto* eps_time = app.add_subcommand("eps-time", "Emit a randomized timing");
  eps_time->add_option("game", eps_args.game, "Game document")->required();
  auto* source = eps_time->add_option_group("source")->require_option(1);
  source->add_option("--window", eps_args.window, "Shifted window size N")
      ->check(CLI::Range(4, 1 << 20));
  source->add_option("--delay", eps_args.delay,
                     "Delay timing for a guessing game at this epsilon");
  source->add_option("--chain", eps_args.chain, "Chain document");
  source->add_option("--indist", eps_args.indist,
                     "Chain construction N,K[,B...]");
  eps_time->add_option("-o,--output", eps_args.out, "Output path");
  eps_time->add_option("--chain-output", eps_args.chain_out,
                       "Also write the constructed chain");
  eps_time->callback([&] { action = [&] { return RunEpsTime(g, eps_args); }; });

  std::uint64_t samples = 0;
  bool is_chain = false;
  auto* verify = app.add_subcommand("verify-timing",
                                    "Measure the epsilon of a timing");
  verify->add_option("game", game, "Game document")->required();
  verify->add_option("timing", timing, "Timing or chain document")
      ->required();
  verify->add_option("--eps", eps, "Target epsilon");
  verify->add_option("--samples", samples,
                     "Estimate by sampling instead of exact enumeration");
  verify->add_flag("--chain", is_chain,
                   "Second argument is a chain document (sampled)");
  verify->callback([&] {
    action = [&] {
      return RunVerifyTiming(g, game, timing, eps, samples, is_chain);
    };
  });

  std::vector<std::string> tv_files;
  std::optional<int> subsets;
  auto* tv = app.add_subcommand("tv", "Total variation distance");
  tv->add_option("files", tv_files, "Distribution documents")->required();
  tv->add_option("--subsets", subsets,
                 "Largest m-subset distance of one chain")
      ->check(CLI::PositiveNumber);
  tv->callback([&] { action = [&] { return RunTv(g, tv_files, subsets); }; });

  auto* augment = app.add_subcommand("augment", "Build the timed game");
  augment->add_option("game", game, "Game document")->required();
  augment->add_option("timing", timing, "Timing document")->required();
  augment->add_option("-o,--output", out, "Output path");
  augment->callback(
      [&] { action = [&] { return RunAugment(g, game, timing, out); }; });

  int player = 1;
  std::optional<std::string> profile;
  auto* advantage = app.add_subcommand(
      "advantage", "Best-response gain from timing information");
  advantage->add_option("game", game, "Game document")->required();
  advantage->add_option("timing", timing, "Timing document")->required();
  advantage->add_option("--player", player, "Player (1-based)")
      ->check(CLI::PositiveNumber);
  advantage->add_option("--profile", profile,
                        "Behaviour of the other players (default uniform)");
  advantage->callback([&] {
    action = [&] { return RunAdvantage(g, game, timing, player, profile); };
  });

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Generate a named family");
  family->add_option("--kind", fam.kind, "figure1 | guessing | agenda-ar | "
                                         "gamma-r | perception | choiceless")
      ->required();
  family->add_option("--r", fam.r, "Index r")->check(CLI::PositiveNumber);
  family->add_option("--c", fam.c, "Perception parameter c")
      ->check(CLI::PositiveNumber);
  family->add_option("--m", fam.m, "Rounds")->check(CLI::PositiveNumber);
  family->add_option("--k", fam.k, "Values per round")
      ->check(CLI::PositiveNumber);
  family->add_option("--variant", fam.variant, "Figure 1 variant a|b|c");
  family->add_option("--seq", fam.seq, "Player sequence, e.g. 233112");
  family->add_flag("--expand", fam.expand,
                   "Emit the extensive-form game of a choiceless family");
  family->add_option("-o,--output", fam.out, "Output path");
  family->callback([&] { action = [&] { return RunFamily(g, fam); }; });

  AgendaArgs ag;
  auto* agenda = app.add_subcommand("verify-agenda",
                                    "Check an agenda timing");
  agenda->add_option("agenda", ag.agenda, "Agenda document")->required();
  agenda->add_option("timing", ag.timing, "Agenda timing document")
      ->required();
  agenda->add_option("--eps", ag.eps, "Epsilon")->default_val("0");
  agenda->add_option("--lambda", ag.lambda, "Lambda")->required();
  agenda->add_option("--shift", ag.shift,
                     "Emit the nonnegative shift for horizon N instead");
  agenda->add_option("--gap-ratios", ag.gap_ratios,
                     "Report perception gap ratios for parameter c instead")
      ->check(CLI::PositiveNumber);
  agenda->add_option("-o,--output", ag.out, "Output path for --shift");
  agenda->callback([&] { action = [&] { return RunVerifyAgenda(g, ag); }; });

  auto* symmetrize = app.add_subcommand(
      "symmetrize", "Symmetrize a timing of a choiceless game");
  symmetrize->add_option("game", game, "Choiceless game document")
      ->required();
  symmetrize->add_option("timing", timing, "Symmetric timing document")
      ->required();
  symmetrize->add_option("-o,--output", out, "Output path");
  symmetrize->callback(
      [&] { action = [&] { return RunSymmetrize(g, game, timing, out); }; });

  std::string lower = "scale:1", upper = "powmax:2";
  auto* lu = app.add_subcommand("lu-time", "Construct a perceived timing");
  lu->add_option("game", game, "Game document")->required();
  lu->add_option("--lower", lower, "Lower clock bound")->capture_default_str();
  lu->add_option("--upper", upper, "Upper clock bound")->capture_default_str();
  lu->add_option("-o,--output", out, "Output path");
  lu->callback(
      [&] { action = [&] { return RunLuTime(game, lower, upper, out); }; });

  auto* verify_lu = app.add_subcommand("verify-lu",
                                       "Check a perceived timing");
  verify_lu->add_option("game", game, "Game document")->required();
  verify_lu->add_option("timing", timing, "Perceived timing document")
      ->required();
  verify_lu->add_option("--lower", lower, "Lower clock bound")
      ->capture_default_str();
  verify_lu->add_option("--upper", upper, "Upper clock bound")
      ->capture_default_str();
  verify_lu->add_option("--eps", eps, "Target epsilon (default 0)");
  verify_lu->callback([&] {
    action = [&] { return RunVerifyLu(g, game, timing, lower, upper, eps); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << "\n";
    return kUsageError;
  }
}
