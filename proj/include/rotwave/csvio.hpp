#pragma once

#include <string>

#include "rotwave/trace.hpp"

namespace rotwave {

/// Fixed-order trace serialization; every value printed with %.17g, so equal
/// runs produce byte-identical files.  Columns:
/// t,E,Estar,l2u,l2v,gradu,gradv,lapu,lapv,wpot,
/// acc_us,acc_grad_us,acc_lap_us,acc_u,acc_grad_u,acc_wpot_u,acc_lap_u,
/// acc_Estar,acc_w_us,acc_w_grad_us,acc_w_grad_u,acc_w_wpot_u,
/// e_balance_residual
std::string trace_to_csv(const TraceSeries& trace);

/// Writes content to path; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

/// Reads the whole file; throws IoError on failure.
std::string read_text_file(const std::string& path);

}  // namespace rotwave
