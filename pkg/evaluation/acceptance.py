"""Acceptance suite: end-to-end runs, oracles, implications and negative controls."""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from config.settings import settings
from data.schemas import AcceptanceSummary, RigidityVerdict
from entwine.antipode import solve_antipode
from entwine.diagrams import check_bimonad, check_compatible, check_delta_law, check_entwining, check_m_law
from entwine.implications import implication_suite
from exactla import LinearMap, Matrix, equalizer, is_isomorphism
from evaluation.corpus import Corpus, build_corpus
from evaluation.oracles import equalizer_is_maximal, plethysm_dim, random_matrix
from rigidity.comparison import comparison_K
from rigidity.morphisms import (
    check_H2iso,
    check_t_triangular,
    phi_map,
    phi_report,
    t_at_trivial_algebra,
    t_morphism,
    t_on_free_algebra,
)
from rigidity.primitives import primitives
from rigidity.verify import rigidity_verify
from shell.library import build_infinitesimal
from species.builtins import as_sequence, com_sequence, regular_sequence, sign_sequence, unit_sequence
from species.monoidal import check_coherence
from species.plethysm import plethysm
from species.schur import evaluate_map
from species.sequence import SequenceMode

Outcome = Tuple[bool, str]


class AcceptanceSuite:
    """Runs every acceptance criterion and collects pass/fail per criterion."""

    def __init__(
        self,
        max_arity: Optional[int] = None,
        end_to_end_cases: Sequence[Tuple[int, int]] = ((1, 3), (2, 3), (1, 4), (2, 4)),
        seed: Optional[int] = None,
    ):
        """
        Args:
            max_arity: Truncation for the corpus and the oracles (default: settings.default_trunc)
            end_to_end_cases: (dim W, N) pairs for the infinitesimal pipeline
            seed: Seed for every randomized part (default: settings.corpus_seed)
        """
        self.max_arity = max_arity or settings.default_trunc
        self.end_to_end_cases = tuple(end_to_end_cases)
        self.seed = seed if seed is not None else settings.corpus_seed
        self._corpus: Optional[Corpus] = None

    @property
    def corpus(self) -> Corpus:
        if self._corpus is None:
            self._corpus = build_corpus(max(self.max_arity, 3), seed=self.seed)
        return self._corpus

    # ------------------------------------------------------------------
    # Criteria
    # ------------------------------------------------------------------

    def infinitesimal_end_to_end(self) -> Outcome:
        failures = []
        for dim, n in self.end_to_end_cases:
            t = build_infinitesimal(n)
            checks = {
                "entwining": check_entwining(t).passed,
                "compatible": check_compatible(t).passed,
                "bimonad": check_bimonad(t).passed,
                "delta_law": check_delta_law(t).passed,
                "m_law": check_m_law(t).passed,
                "phi_identity": phi_report(t).is_identity,
            }
            b = comparison_K(t, dim, n)
            prim = primitives(b)
            checks["prim_dim"] = prim.dim == dim and set(prim.space.weights) == {1}
            report = rigidity_verify(b)
            checks["rigidity"] = report.verdict == RigidityVerdict.PASS
            failed = [name for name, ok in checks.items() if not ok]
            if failed:
                failures.append(f"dim {dim}, N {n}: {failed}")
        return not failures, "; ".join(failures) or f"{len(self.end_to_end_cases)} cases"

    def antipode(self) -> Outcome:
        n = max(self.max_arity, 4)
        solution = solve_antipode(build_infinitesimal(n))
        if not solution.report.found or not solution.report.residual_zero:
            return False, "no antipode with zero residual"
        signs_ok = all(solution.antipode.arity(k).entries == ((-1) ** (k - 1),) for k in range(1, n + 1))
        return signs_ok, f"S_n = (-1)^(n-1) up to arity {n}" if signs_ok else "unexpected antipode"

    def plethysm_oracle(self) -> Outcome:
        n_max = max(self.max_arity, 4)
        pairs = [
            (as_sequence(n_max), as_sequence(n_max)),
            (unit_sequence(n_max), as_sequence(n_max)),
            (com_sequence(n_max), com_sequence(n_max)),
            (com_sequence(n_max), sign_sequence(n_max)),
            (sign_sequence(n_max), com_sequence(n_max)),
            (sign_sequence(n_max), sign_sequence(n_max)),
            (unit_sequence(n_max, SequenceMode.SYMMETRIC), com_sequence(n_max)),
            (regular_sequence(n_max, 2), com_sequence(n_max)),
            (com_sequence(n_max), regular_sequence(n_max, 2)),
        ]
        mismatches = []
        for outer, inner in pairs:
            composite, _ = plethysm(outer, inner)
            for n in range(1, n_max + 1):
                expected = plethysm_dim(outer, inner, n)
                if composite.dim(n) != expected:
                    mismatches.append(f"{outer.name}∘{inner.name}({n}): {composite.dim(n)} != {expected}")
        return not mismatches, "; ".join(mismatches) or f"{len(pairs)} pairs up to arity {n_max}"

    def implications(self) -> Outcome:
        violations = []
        for name, t in self.corpus.triples.items():
            report = implication_suite(t)
            violations.extend(f"{name}: {entry.name}" for entry in report.violations())
        return not violations, "; ".join(violations) or f"{len(self.corpus.triples)} triples consistent"

    def isomorphism_criteria(self) -> Outcome:
        problems = []
        for name, b in self.corpus.bialgebras.items():
            ent = b.entwining
            at_b = is_isomorphism(t_morphism(b))
            free = is_isomorphism(t_on_free_algebra(ent, 1, b.trunc))
            if at_b != free:
                problems.append(f"{name}: t at X {at_b}, on the free algebra {free}")
            if check_H2iso(ent) and not at_b:
                problems.append(f"{name}: φ invertible but t is not")
            if not check_t_triangular(b).passed:
                problems.append(f"{name}: t not triangular")
        # t at (V, eps_V) is phi_V for every lambda, so a singular phi must show up there
        singular = 0
        for name, t in self.corpus.triples.items():
            n = t.max_arity
            at_trivial = t_at_trivial_algebra(t, 1, n)
            phi_iso = check_H2iso(t)
            if at_trivial != evaluate_map(phi_map(t), 1, n):
                problems.append(f"{name}: t at (V, ε_V) differs from φ_V")
            elif is_isomorphism(at_trivial) != phi_iso:
                problems.append(f"{name}: φ invertible {phi_iso}, t at (V, ε_V) invertible {not phi_iso}")
            singular += not phi_iso
        if not singular:
            problems.append("no triple with a singular φ in the corpus")
        detail = (f"{len(self.corpus.bialgebras)} bialgebras agree; "
                  f"{singular} of {len(self.corpus.triples)} triples with singular φ")
        return not problems, "; ".join(problems) or detail

    def negative_controls(self) -> Outcome:
        problems = []
        for fixture in self.corpus.corrupted:
            report = fixture.check()
            if report.passed or report.first_witness() is None:
                problems.append(f"{fixture.part}: corruption not caught with a witness")
            verdict = rigidity_verify(fixture.bialgebra, refuse_quietly=True)
            if verdict.verdict != RigidityVerdict.REFUSED:
                problems.append(f"{fixture.part}: rigidity returned {verdict.verdict.value}")
        return not problems, "; ".join(problems) or f"{len(self.corpus.corrupted)} fixtures rejected"

    def equalizer_oracle(self, pairs: int = 20) -> Outcome:
        rng = np.random.default_rng(self.seed)
        failures = 0
        for _ in range(pairs):
            rows, cols = (int(x) for x in rng.integers(1, 9, size=2))
            f = LinearMap.from_matrix(random_matrix(rng, rows, cols))
            # f - g has rank at most r, so the equalizer is usually nonzero
            r = int(rng.integers(0, min(rows, cols) + 1))
            diff = random_matrix(rng, rows, r) @ random_matrix(rng, r, cols) if r else Matrix.zeros(rows, cols)
            g = LinearMap.from_matrix(f.matrix - diff)
            if not equalizer_is_maximal(f, g, equalizer(f, g)):
                failures += 1
        return failures == 0, f"{pairs - failures}/{pairs} pairs"

    def coherence(self) -> Outcome:
        n = max(self.max_arity, 4)
        quadruples = [
            (as_sequence(n),) * 4,
            (com_sequence(n),) * 4,
            (com_sequence(n), sign_sequence(n), com_sequence(n), sign_sequence(n)),
        ]
        failed = []
        for quad in quadruples:
            report = check_coherence(*quad)
            if not report.passed:
                failed.append(f"{report.subject}: {report.first_witness()}")
        return not failed, "; ".join(failed) or f"{len(quadruples)} quadruples"

    # ------------------------------------------------------------------

    def run(self, only: Optional[Sequence[str]] = None) -> AcceptanceSummary:
        """
        Run the criteria (all of them unless only names a subset).

        Returns:
            AcceptanceSummary with one result per criterion
        """
        criteria = {
            "infinitesimal_end_to_end": self.infinitesimal_end_to_end,
            "antipode": self.antipode,
            "plethysm_oracle": self.plethysm_oracle,
            "implications": self.implications,
            "isomorphism_criteria": self.isomorphism_criteria,
            "negative_controls": self.negative_controls,
            "equalizer_oracle": self.equalizer_oracle,
            "coherence": self.coherence,
        }
        results: Dict[str, bool] = {}
        details: Dict[str, str] = {}
        for name, criterion in criteria.items():
            if only is not None and name not in only:
                continue
            passed, detail = criterion()
            results[name] = passed
            details[name] = detail
            logger.info(f"acceptance {name}: {'PASS' if passed else 'FAIL'} ({detail})")
        passed = sum(1 for ok in results.values() if ok)
        return AcceptanceSummary(
            total=len(results),
            passed=passed,
            failed=len(results) - passed,
            results=results,
            details=details,
        )
