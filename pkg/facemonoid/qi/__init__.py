from .evaluate import EvaluationResult, evaluate
from .families import gen_Q, gen_Q_prime
from .grammar import parse_qi
from .model import Equation, QuasiIdentity, Term, eq, format_qi
