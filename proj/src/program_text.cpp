// Copyright 2026 The diqft Authors
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

#include <ostream>
#include <sstream>

#include "diqft/lowering.hpp"

namespace diqft {

void write_program_text(std::ostream &out, const LoweredProgram &program) {
    const auto &ledger = program.ledger;
    out << "# diqft lowered program\n";
    out << "layout " << program.layout.nodes() << ' ' << program.layout.qubits_per_node() << '\n';
    out << "protocol " << protocol_name(program.protocol) << '\n';
    out << "width " << program.width << '\n';
    out << "classical_bits " << program.classical_bits << '\n';
    for (const Gate &op : program.ops) {
        out << to_string(op) << '\n';
    }
    out << "final_location";
    for (Qubit w : program.final_location) {
        out << ' ' << w;
    }
    out << '\n';
    out << "input_permutation";
    for (Qubit w : program.input_permutation) {
        out << ' ' << w;
    }
    out << '\n';
    out << "ledger epr_total=" << ledger.epr_total << " classical_messages=" << ledger.classical_messages
        << " comm_ops=" << ledger.comm_ops << " local_cp=" << ledger.comp_ops_local_cp
        << " remote_cp=" << ledger.comp_ops_remote_cp << '\n';
}

std::string program_text(const LoweredProgram &program) {
    std::ostringstream out;
    write_program_text(out, program);
    return out.str();
}

}  // namespace diqft
