// Copyright 2026 The mqt developers
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

#ifndef MQT_JSON_IO_HPP
#define MQT_JSON_IO_HPP

#include "json.hpp"
#include "mqt/clone_delete.hpp"
#include "mqt/distinguish.hpp"
#include "mqt/hiding.hpp"
#include "mqt/linalg.hpp"
#include "mqt/poly.hpp"
#include "mqt/states.hpp"

namespace mqt {

/// All reports use insertion-ordered JSON so identical runs serialize to
/// identical bytes.
using Json = nlohmann::ordered_json;

// Encoders. Scalars and containers follow one convention throughout:
// field {"p": n}; vector [ints]; matrix [[ints]]; polynomial ascending
// coefficient array; subspace {"ambient", "basis"}; complex number [re, im].
Json to_json(const FieldSpec& f);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Subspace& s);
Json to_json(const Polynomial& q);
Json to_json(const ModalState& s);        // {"p", "dim", "coeffs"}
Json to_json(const BipartiteState& s);    // {"left_dim", "right_dim", "matrix"}
Json to_json(const StateSet& s);          // {"p", "dim", "states"}
Json to_json(const Discriminator& d);
Json to_json(const CopyAnalysis& a);      // {"M", "flags", "witness_at"}
Json to_json(const FeasibilityResult& r);
Json to_json(const CloneBreakdown& b);
Json to_json(const MachineWitness& w);
Json to_json(const RecordedDeletion& r);
Json to_json(const HidingMapSpec& spec);  // {"p", "M0", "M1"}
Json to_json(const ProductWitness& w);
Json to_json(const HidingReport& r);
Json to_json(const AqtHidingInstance& inst);
Json to_json(const AqtProductWitness& w);

// Decoders. Malformed or out-of-schema input raises DomainError.
FieldSpec field_from_json(const Json& j);
Vec vec_from_json(const FieldSpec& f, const Json& j);
Mat mat_from_json(const FieldSpec& f, const Json& j);
Polynomial poly_from_json(const FieldSpec& f, const Json& j);
StateSet state_set_from_json(const Json& j);
HidingMapSpec hiding_spec_from_json(const Json& j);
AqtHidingInstance aqt_instance_from_json(const Json& j);

}  // namespace mqt

#endif
