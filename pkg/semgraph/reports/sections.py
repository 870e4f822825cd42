"""Report sections for each analysis result."""

from typing import Optional, Sequence

from semgraph.core.graph import Violation
from semgraph.i18n import t
from semgraph.nullmodel.generators import ProjectionComparison, RandomComparison
from semgraph.relevance.links import LinkOutlier, LinkRelevance, LinkTypeRelevance
from semgraph.relevance.nodes import NodeRelevance
from semgraph.reports.render import ReportWriter
from semgraph.stats.clustering import ClusteringRank
from semgraph.stats.degree import DegreeDistribution
from semgraph.stats.paths import PathMatrix, RemovalImpact
from semgraph.stats.report import TypeStatsReport

SUMMARY_COLUMNS = [
    ("index", "col_index"),
    ("node_type", "col_type"),
    ("count", "col_count"),
    ("per_type_degree", "col_m"),
    ("sigma_k", "col_sigma_k"),
    ("r", "col_r"),
    ("sigma_r", "col_sigma_r"),
]

FULL_COLUMNS = SUMMARY_COLUMNS[:3] + [
    ("significant", "col_significant"),
    ("base_degree", "col_base_degree"),
    ("mean_degree", "col_mean_degree"),
    ("per_type_degree", "col_m"),
    ("sigma_k", "col_sigma_k"),
    ("mean_disparity", "col_mean_y"),
    ("sigma_y", "col_sigma_y"),
    ("random_disparity", "col_random_y"),
    ("r", "col_r"),
    ("sigma_r", "col_sigma_r"),
]


def add_violations(writer: ReportWriter, violations: Sequence[Violation]) -> None:
    if not violations:
        writer.note("validation", t(writer.language, "validate_ok"), {"violations": 0})
        return
    writer.section(
        "violations",
        t(writer.language, "section_violations"),
        [("kind", "col_kind"), ("subject", "col_subject"), ("message", "col_message")],
        [{"kind": v.kind, "subject": v.subject, "message": v.message} for v in violations],
    )


def add_type_stats(writer: ReportWriter, report: TypeStatsReport, full: bool = False) -> None:
    """Summary columns (or every column with `full`) in table format; every field in structured format."""
    records = [
        {"index": index, **row}
        for index, row in enumerate(report.to_dict()["types"], start=1)
    ]
    columns = FULL_COLUMNS if full else SUMMARY_COLUMNS
    writer.section("types", t(writer.language, "section_types"), columns, records)


def add_degree_distribution(writer: ReportWriter, distribution: DegreeDistribution) -> None:
    probabilities = distribution.probabilities()
    writer.section(
        f"distribution_{distribution.node_type}",
        t(writer.language, "section_distribution", node_type=distribution.node_type),
        [("k", "col_degree"), ("frequency", "col_frequency"), ("p", "col_probability")],
        [
            {"k": k, "frequency": f, "p": probabilities[k]}
            for k, f in distribution.frequencies.items()
        ],
    )


def add_path_matrix(writer: ReportWriter, matrix: PathMatrix) -> None:
    writer.section(
        "paths",
        t(writer.language, "section_paths"),
        [
            ("source_type", "col_source_type"),
            ("target_type", "col_target_type"),
            ("mean", "col_mean_length"),
            ("reachable", "col_reachable"),
            ("unreachable", "col_unreachable"),
        ],
        [
            {
                "source_type": a,
                "target_type": b,
                "mean": entry.mean,
                "reachable": entry.reachable,
                "unreachable": entry.unreachable,
            }
            for (a, b), entry in sorted(matrix.entries.items())
        ],
    )


def add_removal_impact(writer: ReportWriter, impacts: Sequence[RemovalImpact]) -> None:
    writer.section(
        "removal",
        t(writer.language, "section_removal"),
        [
            ("node_type", "col_type"),
            ("removed_nodes", "col_removed"),
            ("baseline_mean", "col_baseline"),
            ("removed_mean", "col_after"),
            ("change", "col_change"),
            ("lost_pairs", "col_lost"),
            ("flagged", "col_flagged"),
        ],
        [
            {
                "node_type": i.node_type,
                "removed_nodes": i.removed_nodes,
                "baseline_mean": i.baseline_mean,
                "removed_mean": i.removed_mean,
                "change": i.change,
                "lost_pairs": i.lost_pairs,
                "flagged": i.flagged,
            }
            for i in impacts
        ],
    )


def add_ontology_summary(writer: ReportWriter, diameter: Optional[int], hubs: Sequence[str]) -> None:
    writer.note(
        "ontology",
        t(writer.language, "section_ontology", diameter=diameter, hubs=",".join(hubs) or "-"),
        {"diameter": diameter, "hub_types": list(hubs)},
    )


def add_node_relevance(writer: ReportWriter, relevances: Sequence[NodeRelevance]) -> None:
    writer.section(
        "nodes",
        t(writer.language, "section_nodes"),
        [
            ("node", "col_node"),
            ("mode", "col_mode"),
            ("value", "col_value"),
            ("tau", "col_tau"),
            ("useful", "col_useful"),
        ],
        [
            {"node": r.node_id, "mode": r.mode.value, "value": r.value, "tau": r.tau, "useful": r.useful}
            for r in relevances
        ],
    )


def add_link_type_relevance(writer: ReportWriter, results: Sequence[LinkTypeRelevance]) -> None:
    writer.section(
        "link_types",
        t(writer.language, "section_link_types"),
        [
            ("link_type", "col_link_type"),
            ("count", "col_links"),
            ("mean", "col_mean_s"),
            ("std", "col_std_s"),
        ],
        [{"link_type": r.link_type, "count": r.count, "mean": r.mean, "std": r.std} for r in results],
    )


def add_link_ranking(writer: ReportWriter, key: str, title: str, links: Sequence[LinkRelevance]) -> None:
    writer.section(
        key,
        title,
        [
            ("a", "col_a"),
            ("b", "col_b"),
            ("common", "col_common"),
            ("union", "col_union"),
            ("score", "col_s"),
        ],
        [{"a": r.a, "b": r.b, "common": r.common, "union": r.union, "score": r.score} for r in links],
    )


def add_link_type_frequencies(writer: ReportWriter, frequencies: Sequence[tuple[str, int]]) -> None:
    writer.section(
        "link_frequencies",
        t(writer.language, "section_link_frequencies"),
        [("link_type", "col_link_type"), ("count", "col_links")],
        [{"link_type": link_type, "count": count} for link_type, count in frequencies],
    )


def add_outliers(writer: ReportWriter, outliers: Sequence[LinkOutlier], z: float) -> None:
    writer.section(
        "outliers",
        t(writer.language, "section_outliers", z=z),
        [
            ("link_type", "col_link_type"),
            ("a", "col_a"),
            ("b", "col_b"),
            ("score", "col_s"),
            ("deviation", "col_deviation"),
        ],
        [
            {"link_type": o.link_type, "a": o.a, "b": o.b, "score": o.score, "deviation": o.deviation}
            for o in outliers
        ],
    )


def add_latent_links(writer: ReportWriter, links: Sequence[LinkRelevance], min_s: float) -> None:
    add_link_ranking(writer, "latent", t(writer.language, "section_latent", min_s=min_s), links)


def add_projection_comparison(writer: ReportWriter, comparison: ProjectionComparison) -> None:
    digits = writer.float_digits
    writer.note(
        "nullmodel",
        t(
            writer.language,
            "nullmodel_projection",
            measured=f"{comparison.mean_clustering:.{digits}f}",
            transitivity=f"{comparison.transitivity:.{digits}f}",
            predicted=f"{comparison.predicted:.{digits}f}",
        ),
        {
            "mode": comparison.mode.value,
            "projected_nodes": comparison.projected_nodes,
            "projected_links": comparison.projected_links,
            "mean_clustering": comparison.mean_clustering,
            "transitivity": comparison.transitivity,
            "predicted": comparison.predicted,
        },
    )


def add_random_comparison(writer: ReportWriter, comparison: RandomComparison) -> None:
    digits = writer.float_digits
    writer.note(
        "nullmodel",
        t(
            writer.language,
            "nullmodel_random",
            measured=f"{comparison.mean_clustering:.{digits}f}",
            predicted=f"{comparison.predicted:.{digits}f}",
        ),
        {
            "mean_degree": comparison.mean_degree,
            "mean_clustering": comparison.mean_clustering,
            "predicted": comparison.predicted,
        },
    )


def add_clustering_rank(writer: ReportWriter, key: str, title: str, ranks: Sequence[ClusteringRank]) -> None:
    writer.section(
        key,
        title,
        [("node", "col_node"), ("node_type", "col_type"), ("degree", "col_degree"), ("value", "col_value")],
        [{"node": r.node_id, "node_type": r.node_type, "degree": r.degree, "value": r.value} for r in ranks],
    )


def add_clustering_summary(writer: ReportWriter, mean: float, transitivity: float) -> None:
    digits = writer.float_digits
    writer.note(
        "clustering",
        t(writer.language, "section_clustering", mean=f"{mean:.{digits}f}", transitivity=f"{transitivity:.{digits}f}"),
        {"mean_clustering": mean, "transitivity": transitivity},
    )
