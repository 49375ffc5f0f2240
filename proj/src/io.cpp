#include "ambigine/io.hpp"

#include <cstdio>
#include <fstream>

namespace ambigine::io {

namespace {

const Json& require(const Json& body, const std::string& key) {
  if (!body.is_object() || !body.contains(key)) {
    throw ValidationError("missing field '" + key + "'");
  }
  return body.at(key);
}

std::vector<std::string> parse_labels(const Json& value, const std::string& what) {
  if (!value.is_array() || value.empty()) throw ValidationError(what + " must be a nonempty array");
  std::vector<std::string> labels;
  labels.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) throw ValidationError(what + " entries must be strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

std::vector<Rat> parse_flat_matrix(const Json& value, std::size_t rows, std::size_t cols,
                                   const std::string& what) {
  std::vector<Rat> flat;
  flat.reserve(rows * cols);
  if (!value.is_array()) throw ValidationError(what + " must be an array");
  const bool nested = !value.empty() && value.front().is_array();
  if (nested) {
    if (value.size() != rows) throw ValidationError(what + " must have one row per state");
    for (const auto& row : value) {
      if (!row.is_array() || row.size() != cols) {
        throw ValidationError(what + " rows must match the signal count");
      }
      for (const auto& cell : row) flat.push_back(parse_rat(cell));
    }
  } else {
    if (value.size() != rows * cols) {
      throw ValidationError(what + " must hold rows*cols entries in row-major order");
    }
    for (const auto& cell : value) flat.push_back(parse_rat(cell));
  }
  return flat;
}

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

Rat parse_rat(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rat(value.get<long long>());
  throw ValidationError("rationals must be strings like \"3/4\" (got " + value.dump() + ")");
}

std::vector<Rat> parse_rat_vector(const Json& value) {
  if (!value.is_array()) throw ValidationError("expected an array of rationals");
  std::vector<Rat> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(parse_rat(item));
  return out;
}

Envelope parse_envelope(const Json& document) {
  if (!document.is_object()) throw ValidationError("instance must be a JSON object");
  const auto& schema = require(document, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchema) {
    throw ValidationError("unrecognized schema version");
  }
  const auto& kind = require(document, "kind");
  if (!kind.is_string()) throw ValidationError("kind must be a string");
  return {kind.get<std::string>(), require(document, "body")};
}

Envelope load_envelope(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw ValidationError("cannot open '" + path + "'");
  Json document;
  try {
    stream >> document;
  } catch (const std::exception& e) {
    throw ValidationError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_envelope(document);
}

Json envelope(const std::string& kind, Json body) {
  Json document;
  document["schema"] = kSchema;
  document["kind"] = kind;
  document["body"] = std::move(body);
  return document;
}

ExtremePriorSet parse_prior_set(const Json& body) {
  StateSpace states(parse_labels(require(body, "states"), "states"));
  SignalSpace signals(parse_labels(require(body, "signals"), "signals"));
  const auto& extremes_json = require(body, "extremes");
  if (!extremes_json.is_array() || extremes_json.empty()) {
    throw ValidationError("extremes must be a nonempty array");
  }
  std::vector<JointDistribution> extremes;
  extremes.reserve(extremes_json.size());
  for (const auto& entry : extremes_json) {
    extremes.emplace_back(states.size(), signals.size(),
                          parse_flat_matrix(entry, states.size(), signals.size(), "extreme"));
  }
  return ExtremePriorSet(std::move(states), std::move(signals), std::move(extremes));
}

MobiusBelief parse_mobius(const Json& body) {
  StateSpace states(parse_labels(require(body, "states"), "states"));
  SignalSpace signals(parse_labels(require(body, "signals"), "signals"));
  const auto& masses_json = require(body, "masses");
  if (!masses_json.is_array() || masses_json.empty()) {
    throw ValidationError("masses must be a nonempty array");
  }
  std::vector<MobiusMass> masses;
  masses.reserve(masses_json.size());
  for (const auto& entry : masses_json) {
    MobiusMass mass;
    const auto& cells = require(entry, "set");
    if (!cells.is_array() || cells.empty()) throw ValidationError("each set must be nonempty");
    for (const auto& cell : cells) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_string() || !cell[1].is_string()) {
        throw ValidationError("set entries must be [state, signal] label pairs");
      }
      mass.cells.emplace_back(states.index_of(cell[0].get<std::string>()),
                              signals.index_of(cell[1].get<std::string>()));
    }
    mass.mass = parse_rat(require(entry, "mass"));
    masses.push_back(std::move(mass));
  }
  return MobiusBelief(std::move(states), std::move(signals), std::move(masses));
}

AmbiguousPrior parse_prior_like(const Json& body) {
  if (body.contains("extremes")) return AmbiguousPrior(parse_prior_set(body));
  if (body.contains("masses")) return AmbiguousPrior(parse_mobius(body));
  throw ValidationError("prior needs either 'extremes' or 'masses'");
}

std::map<std::string, ActEntry> parse_acts(const Json& body, std::size_t states,
                                           std::size_t signals) {
  std::map<std::string, ActEntry> acts;
  if (!body.contains("acts")) return acts;
  const auto& acts_json = body.at("acts");
  if (!acts_json.is_object()) throw ValidationError("acts must be an object");
  for (const auto& [name, value] : acts_json.items()) {
    ActEntry entry;
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      entry.extended = ExtendedAct(states, signals, parse_flat_matrix(value, states, signals,
                                                                      "act '" + name + "'"));
    } else if (value.is_array() && value.size() == states) {
      entry.act = Act(parse_rat_vector(value));
    } else if (value.is_array() && value.size() == states * signals) {
      entry.extended = ExtendedAct(states, signals, parse_rat_vector(value));
    } else {
      throw ValidationError("act '" + name + "' must be a state vector or a state x signal matrix");
    }
    acts.emplace(name, std::move(entry));
  }
  return acts;
}

BeliefProfile parse_profile(const Json& body) {
  StateSpace states(parse_labels(require(body, "states"), "states"));
  SignalSpace signals(parse_labels(require(body, "signals"), "signals"));
  std::vector<Rat> mu = parse_rat_vector(require(body, "mu"));
  const auto& posteriors_json = require(body, "posteriors");
  std::vector<std::vector<Rat>> posteriors;
  posteriors.reserve(signals.size());
  if (posteriors_json.is_object()) {
    for (std::size_t t = 0; t < signals.size(); ++t) {
      if (!posteriors_json.contains(signals.label(t))) {
        throw ValidationError("missing posterior for signal '" + signals.label(t) + "'");
      }
      posteriors.push_back(parse_rat_vector(posteriors_json.at(signals.label(t))));
    }
  } else if (posteriors_json.is_array() && posteriors_json.size() == signals.size()) {
    for (const auto& entry : posteriors_json) posteriors.push_back(parse_rat_vector(entry));
  } else {
    throw ValidationError("posteriors must map each signal to a belief");
  }
  return BeliefProfile(std::move(states), std::move(signals), std::move(mu), std::move(posteriors));
}

namespace {

std::vector<Kernel> parse_kernels(const Json& value, std::size_t states, std::size_t signals,
                                  const std::string& what) {
  if (!value.is_array() || value.empty()) throw ValidationError(what + " must be a nonempty array");
  std::vector<Kernel> kernels;
  kernels.reserve(value.size());
  for (const auto& kernel_json : value) {
    if (!kernel_json.is_array() || kernel_json.size() != states) {
      throw ValidationError(what + " kernels need one row per state");
    }
    Kernel kernel;
    kernel.rows.reserve(states);
    for (const auto& row : kernel_json) {
      auto parsed = parse_rat_vector(row);
      if (parsed.size() != signals) throw ValidationError(what + " rows must match signals");
      kernel.rows.push_back(std::move(parsed));
    }
    kernels.push_back(std::move(kernel));
  }
  return kernels;
}

}  // namespace

ProductStructure parse_product(const Json& body) {
  StateSpace states(parse_labels(require(body, "states"), "states"));
  std::vector<Rat> mu = parse_rat_vector(require(body, "mu"));
  SignalSpace first(parse_labels(require(body, "signals_first"), "signals_first"));
  SignalSpace second(parse_labels(require(body, "signals_second"), "signals_second"));
  auto kernels_first =
      parse_kernels(require(body, "kernels_first"), states.size(), first.size(), "kernels_first");
  auto kernels_second = parse_kernels(require(body, "kernels_second"), states.size(), second.size(),
                                      "kernels_second");
  return ProductStructure(std::move(states), std::move(mu), std::move(first),
                          std::move(kernels_first), std::move(second), std::move(kernels_second));
}

PersuasionInstance parse_persuasion(const Json& body) {
  StateSpace states(parse_labels(require(body, "states"), "states"));
  std::vector<std::string> actions = parse_labels(require(body, "actions"), "actions");
  const std::size_t m = states.size();
  const std::size_t k = actions.size();
  auto parse_matrix = [&](const Json& value, const std::string& what) {
    if (!value.is_array() || value.size() != m) throw ValidationError(what + " needs a row per state");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(m);
    for (const auto& row : value) {
      auto parsed = parse_rat_vector(row);
      if (parsed.size() != k) throw ValidationError(what + " rows must match actions");
      rows.push_back(std::move(parsed));
    }
    return rows;
  };
  return PersuasionInstance(std::move(states), std::move(actions),
                            parse_matrix(require(body, "u"), "u"),
                            parse_matrix(require(body, "v"), "v"),
                            parse_rat_vector(require(body, "mu")));
}

std::vector<std::vector<Rat>> parse_targets(const Json& body, const PersuasionInstance& instance) {
  const auto& targets_json = require(body, "targets");
  if (!targets_json.is_object()) throw ValidationError("targets must map states to beliefs");
  std::vector<std::vector<Rat>> targets;
  targets.reserve(instance.states.size());
  for (std::size_t s = 0; s < instance.states.size(); ++s) {
    const std::string& label = instance.states.label(s);
    if (!targets_json.contains(label)) {
      throw ValidationError("missing target for state '" + label + "'");
    }
    targets.push_back(parse_rat_vector(targets_json.at(label)));
  }
  return targets;
}

Json rat_json(const Rat& value, bool float_mode) {
  if (float_mode) return format_float(to_double(value));
  return format_rational(value);
}

Json rat_vector_json(const std::vector<Rat>& values, bool float_mode) {
  Json out = Json::array();
  for (const auto& value : values) out.push_back(rat_json(value, float_mode));
  return out;
}

Json posterior_json(const PosteriorSet& posterior, bool float_mode) {
  Json out;
  out["singleton"] = posterior.singleton();
  Json extremes = Json::array();
  for (const auto& point : posterior.extremes()) extremes.push_back(rat_vector_json(point, float_mode));
  out["extremes"] = std::move(extremes);
  if (posterior.singleton()) out["point"] = rat_vector_json(posterior.point(), float_mode);
  return out;
}

Json state_belief_json(const StateBelief& belief, bool float_mode) {
  Json out = Json::array();
  for (const auto& [set, mass] : belief.masses()) {
    Json entry;
    Json labels = Json::array();
    for (std::size_t s : set) labels.push_back(belief.states().label(s));
    entry["set"] = std::move(labels);
    entry["mass"] = rat_json(mass, float_mode);
    out.push_back(std::move(entry));
  }
  return out;
}

Json prior_set_body(const ExtremePriorSet& prior) {
  Json body;
  body["states"] = prior.states().labels();
  body["signals"] = prior.signals().labels();
  Json extremes = Json::array();
  for (const auto& e : prior.extremes()) extremes.push_back(rat_vector_json(e.flat()));
  body["extremes"] = std::move(extremes);
  return body;
}

Json decomposition_json(const SimpleDecomposition& decomposition, bool float_mode) {
  Json out;
  out["states"] = decomposition.states().labels();
  out["signals"] = decomposition.signals().labels();
  out["mu"] = rat_vector_json(decomposition.mu(), float_mode);
  Json kernels = Json::array();
  for (const auto& kernel : decomposition.interpretations()) {
    Json rows = Json::array();
    for (const auto& row : kernel.rows) rows.push_back(rat_vector_json(row, float_mode));
    kernels.push_back(std::move(rows));
  }
  out["interpretations"] = std::move(kernels);
  return out;
}

Json certificate_json(const DesignCertificate& certificate, const PersuasionInstance& instance,
                      bool float_mode) {
  const BlockStructure& block = certificate.structure;
  Json out;
  out["signal_count"] = static_cast<long long>(block.copies) * static_cast<long long>(block.state_count);
  out["system_count"] = out["signal_count"];
  out["N"] = block.copies;
  out["l_star"] = rat_json(certificate.l_star, float_mode);
  out["v_star"] = rat_json(certificate.v_star, float_mode);
  out["ideal"] = rat_json(certificate.ideal, float_mode);
  out["common_optimum"] = certificate.common_optimum;
  Json groups = Json::array();
  for (std::size_t j = 0; j < block.state_count; ++j) {
    Json group;
    group["state"] = instance.states.label(j);
    group["action"] = instance.actions.at(block.group_action[j]);
    group["target"] = rat_vector_json(block.targets[j], float_mode);
    group["lambda"] = rat_vector_json(block.lam[j], float_mode);
    group["r"] = rat_json(block.r[j], float_mode);
    Json diag = Json::array();
    Json cross = Json::array();
    for (std::size_t s = 0; s < block.state_count; ++s) {
      diag.push_back(rat_json(block.diag(j, s), float_mode));
      cross.push_back(s == j ? Json(nullptr) : rat_json(block.cross_state(j, s), float_mode));
    }
    group["diag"] = std::move(diag);
    group["offdiag_same_state"] = rat_json(block.same_state_offdiag(j), float_mode);
    group["cross"] = std::move(cross);
    groups.push_back(std::move(group));
  }
  out["groups"] = std::move(groups);
  out["payoff_per_system"] = rat_vector_json(certificate.payoff_per_system, float_mode);
  return out;
}

}  // namespace ambigine::io
