#include "coarsepaths/error.hpp"

namespace coarsepaths {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootMissing: return "RootMissing";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::VertexMissing: return "VertexMissing";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::FlipNotSimple: return "FlipNotSimple";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::CyclesNotDisjoint: return "CyclesNotDisjoint";
    case ErrorCode::CycleTooLong: return "CycleTooLong";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Unknown";
}

}  // namespace coarsepaths
