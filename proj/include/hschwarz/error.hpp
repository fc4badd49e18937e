#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hschwarz {

/// Failure categories raised by the library. Each maps onto one precondition
/// or contract named by the operation that throws it.
enum class errc {
    domain,                      ///< argument outside the operation's domain
    order_exceeds_truncation,    ///< derivative or coefficient beyond truncation order
    composition_domain,          ///< inner(center) does not land on outer.center
    arity,                       ///< too few outer derivatives for Faa di Bruno
    partition_cap,               ///< partition size outside [1, 20]
    center_mismatch,             ///< h and g expanded about different points
    not_a_zero,                  ///< w(z0) != 0
    not_sense_preserving,        ///< zero-order dominance |b_p| < |a_p| violated
    critical_point,              ///< w_z = 0 where the dilatation is requested
    coefficient_bound,           ///< s exceeds 4/pi
    canonicalization_required,   ///< map must be canonical about 0
    normalization,               ///< series must vanish at its center
    witness_invalid,             ///< |w(alpha)| != 1 for a boundary witness
    generation_failure,          ///< rejection budget exhausted
    io,                          ///< file or parse failure
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::domain: return "domain";
        case errc::order_exceeds_truncation: return "order-exceeds-truncation";
        case errc::composition_domain: return "composition-domain";
        case errc::arity: return "arity";
        case errc::partition_cap: return "partition-cap";
        case errc::center_mismatch: return "center-mismatch";
        case errc::not_a_zero: return "not-a-zero";
        case errc::not_sense_preserving: return "not-sense-preserving";
        case errc::critical_point: return "critical-point";
        case errc::coefficient_bound: return "coefficient-bound";
        case errc::canonicalization_required: return "canonicalization-required";
        case errc::normalization: return "normalization";
        case errc::witness_invalid: return "witness-invalid";
        case errc::generation_failure: return "generation-failure";
        case errc::io: return "io";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace hschwarz
