"""Flow numbers of signed eulerian multigraphs, with certificates and a brute-force oracle."""

from .classify import FlowClass, Verdict, construct_flow, flow_number, group_flow, is_flow_admissible
from .errors import InternalError, InvalidArgument, ParseError, SignedFlowError, Undecided
from .flows import Flow, VerifyReport, verify_flow
from .graph import Edge, Parity, SignedMultigraph, switch
from .groups import GroupSpec

__all__ = [
    "Edge",
    "Flow",
    "FlowClass",
    "GroupSpec",
    "InternalError",
    "InvalidArgument",
    "Parity",
    "ParseError",
    "SignedFlowError",
    "SignedMultigraph",
    "Undecided",
    "Verdict",
    "VerifyReport",
    "construct_flow",
    "flow_number",
    "group_flow",
    "is_flow_admissible",
    "switch",
    "verify_flow",
]
