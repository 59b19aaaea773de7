#pragma once

#include <string>

#include "json.hpp"
#include "masi/matrix.hpp"
#include "masi/states.hpp"

namespace masi {

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Accepts the schema above; "im" may be omitted, "dim" is inferred from
/// "re" when absent. Throws InvalidSpec.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Either a state matrix {"dims": [...], "re", "im"} or a StateSpec object
/// {"kind": ..., "dims": [...], "seed": ..., "param": ..., "parts": [...]}.
MaterializedState state_from_json(const nlohmann::json& j);
StateSpec state_spec_from_json(const nlohmann::json& j);

/// Reads and parses a state file. Throws FileError when unreadable.
MaterializedState load_state_file(const std::string& path);

}  // namespace masi
