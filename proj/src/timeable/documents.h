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

#ifndef TIMEABLE_DOCUMENTS_H_
#define TIMEABLE_DOCUMENTS_H_

#include <string>
#include <string_view>

#include "timeable/agenda_lab.h"
#include "timeable/chain.h"
#include "timeable/distribution.h"
#include "timeable/exact_timing.h"
#include "timeable/families.h"
#include "timeable/game.h"
#include "timeable/perception.h"
#include "timeable/randomized_timing.h"
#include "timeable/timed_game.h"

// JSON exchange formats. Parsers throw Error(kParse) with a line and column
// for malformed text or fields, and Error(kInvalid) for documents that are
// well formed but violate a model invariant. Serializers emit canonical
// field order and lowest-terms rationals.
namespace timeable {

// Validation is left to the caller.
GameSpec ParseGameSpec(std::string_view text);
Game ParseGame(std::string_view text);
std::string SerializeGame(const Game& game);
// FNV-1a over the canonical compact form, e.g. "fnv1a64:0123456789abcdef".
std::string GameDigest(const Game& game);

DeterministicTiming ParseTiming(const Game& game, std::string_view text);
std::string SerializeTiming(const Game& game, const DeterministicTiming& t);

// Accepts an atom list or a single-timing document. A "game" digest, when
// present, must match.
RandomizedTiming ParseRandomizedTiming(const Game& game,
                                       std::string_view text);
std::string SerializeRandomizedTiming(const Game& game,
                                      const RandomizedTiming& rt);

Distribution ParseDistribution(std::string_view text);
std::string SerializeDistribution(const Distribution& d);

// Either a distribution document or {"offsets": [...], "spread": "B"}.
ChainDistribution ParseChain(std::string_view text);
std::string SerializeChain(const ChainDistribution& cd);

BehaviorProfile ParseProfile(std::string_view text);
std::string SerializeProfile(const BehaviorProfile& profile);

Agenda ParseAgenda(std::string_view text);
std::string SerializeAgenda(const Agenda& agenda);
std::string AgendaDigest(const Agenda& agenda);

SymmetricChoicelessGame ParseChoiceless(std::string_view text);
std::string SerializeChoiceless(const SymmetricChoicelessGame& scg);

AgendaTiming ParseAgendaTiming(const Agenda& agenda, std::string_view text);
std::string SerializeAgendaTiming(const Agenda& agenda,
                                  const AgendaTiming& t);

SymmetricGameTiming ParseSymmetricTiming(std::string_view text);
std::string SerializeSymmetricTiming(const SymmetricGameTiming& t);

PerceivedTiming ParsePerceivedTiming(const Game& game, std::string_view text);
std::string SerializePerceivedTiming(const Game& game,
                                     const PerceivedTiming& pt);

// Reports.
std::string ValidationJson(const Game& game, const ValidationReport& report);
std::string EpsilonJson(const Game& game, const EpsilonReport& report);
std::string EstimateJson(const Game& game, const EstimateReport& report);
std::string AdvantageJson(const AdvantageReport& report);
std::string AgendaReportJson(const AgendaReport& report);
std::string LuReportJson(const Game& game, const LuReport& report);

}  // namespace timeable

#endif  // TIMEABLE_DOCUMENTS_H_
