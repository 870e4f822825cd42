"""Report labels and diagnostics for all supported report languages."""

TRANSLATIONS = {
    # ==========================================================================
    # ENGLISH
    # ==========================================================================
    "en": {
        # Provenance header
        "header_version": "semgraph {version}",
        "header_flags": "flags: {flags}",
        "undefined": "undefined",

        # Type statistics
        "col_index": "#",
        "col_type": "type",
        "col_count": "n_alpha",
        "col_m": "m_alpha",
        "col_sigma_k": "sigma_k",
        "col_r": "R(alpha)",
        "col_sigma_r": "sigma_R",
        "col_significant": "significant",
        "col_mean_degree": "mean_k",
        "col_base_degree": "k0",
        "col_mean_y": "Y2",
        "col_sigma_y": "sigma_Y",
        "col_random_y": "Y2_random",

        # Degree distributions
        "col_degree": "k",
        "col_frequency": "frequency",
        "col_probability": "P(k)",

        # Path matrix
        "col_source_type": "source_type",
        "col_target_type": "target_type",
        "col_mean_length": "mean_length",
        "col_reachable": "reachable",
        "col_unreachable": "unreachable",
        "col_removed": "removed",
        "col_baseline": "baseline",
        "col_after": "after_removal",
        "col_change": "change",
        "col_lost": "lost_pairs",
        "col_flagged": "flagged",

        # Relevance
        "col_node": "node",
        "col_mode": "mode",
        "col_value": "C",
        "col_tau": "tau",
        "col_useful": "useful",
        "col_link_type": "link_type",
        "col_links": "count",
        "col_mean_s": "mean_S",
        "col_std_s": "sigma_S",
        "col_a": "a",
        "col_b": "b",
        "col_s": "S",
        "col_common": "common",
        "col_union": "union",
        "col_deviation": "deviation",

        # Validation
        "col_kind": "kind",
        "col_subject": "subject",
        "col_message": "message",
        "validate_ok": "conformant: no violations",
        "section_violations": "ontology violations",

        # Section titles
        "section_types": "type statistics",
        "section_distribution": "degree distribution: {node_type}",
        "section_paths": "path length matrix",
        "section_removal": "type removal impact",
        "section_ontology": "ontology: diameter={diameter} hub_types={hubs}",
        "section_nodes": "node relevance",
        "section_rank_plain": "largest clustering coefficients",
        "section_rank_semantic": "largest ontology-constrained clustering coefficients",
        "section_clustering": "mean C={mean} transitivity={transitivity}",
        "section_link_types": "link type relevance",
        "section_outliers": "relevance outliers (z={z})",
        "section_latent": "latent links (S >= {min_s})",
        "section_links_by_score": "links ranked by S",
        "section_links_by_common": "links ranked by common neighbors",
        "section_links_semantic": "links ranked by ontology-constrained S",
        "section_link_frequencies": "link type frequencies",
        "nullmodel_projection": "measured mean C={measured} transitivity={transitivity} predicted 1/(mu+1)={predicted}",
        "nullmodel_random": "measured mean C={measured} predicted k/n={predicted}",

        # Diagnostics
        "error_usage": "usage error: {message}",
        "error_data": "data error: {message}",
        "error_internal": "internal invariant failure: {message}",
        "error_missing_input": "--{name} is required for this command",
        "written": "report written to {path}",
    },

    # ==========================================================================
    # SPANISH
    # ==========================================================================
    "es": {
        "header_version": "semgraph {version}",
        "header_flags": "opciones: {flags}",
        "undefined": "indefinido",

        "col_index": "#",
        "col_type": "tipo",
        "col_count": "n_alpha",
        "col_m": "m_alpha",
        "col_sigma_k": "sigma_k",
        "col_r": "R(alpha)",
        "col_sigma_r": "sigma_R",
        "col_significant": "significativo",
        "col_mean_degree": "k_medio",
        "col_base_degree": "k0",
        "col_mean_y": "Y2",
        "col_sigma_y": "sigma_Y",
        "col_random_y": "Y2_azar",

        "col_degree": "k",
        "col_frequency": "frecuencia",
        "col_probability": "P(k)",

        "col_source_type": "tipo_origen",
        "col_target_type": "tipo_destino",
        "col_mean_length": "longitud_media",
        "col_reachable": "alcanzables",
        "col_unreachable": "inalcanzables",
        "col_removed": "eliminados",
        "col_baseline": "base",
        "col_after": "tras_eliminar",
        "col_change": "cambio",
        "col_lost": "pares_perdidos",
        "col_flagged": "marcado",

        "col_node": "nodo",
        "col_mode": "modo",
        "col_value": "C",
        "col_tau": "tau",
        "col_useful": "util",
        "col_link_type": "tipo_enlace",
        "col_links": "cantidad",
        "col_mean_s": "S_medio",
        "col_std_s": "sigma_S",
        "col_a": "a",
        "col_b": "b",
        "col_s": "S",
        "col_common": "comunes",
        "col_union": "union",
        "col_deviation": "desviacion",

        "col_kind": "clase",
        "col_subject": "sujeto",
        "col_message": "mensaje",
        "validate_ok": "conforme: sin violaciones",
        "section_violations": "violaciones de la ontologia",

        "section_types": "estadisticas por tipo",
        "section_distribution": "distribucion de grado: {node_type}",
        "section_paths": "matriz de longitudes de camino",
        "section_removal": "impacto de eliminar cada tipo",
        "section_ontology": "ontologia: diametro={diameter} tipos_centrales={hubs}",
        "section_nodes": "relevancia de nodos",
        "section_rank_plain": "mayores coeficientes de agrupamiento",
        "section_rank_semantic": "mayores coeficientes de agrupamiento segun la ontologia",
        "section_clustering": "C medio={mean} transitividad={transitivity}",
        "section_link_types": "relevancia por tipo de enlace",
        "section_outliers": "enlaces atipicos (z={z})",
        "section_latent": "enlaces latentes (S >= {min_s})",
        "section_links_by_score": "enlaces ordenados por S",
        "section_links_by_common": "enlaces ordenados por vecinos comunes",
        "section_links_semantic": "enlaces ordenados por S restringido por la ontologia",
        "section_link_frequencies": "frecuencia por tipo de enlace",
        "nullmodel_projection": "C medio medido={measured} transitividad={transitivity} prediccion 1/(mu+1)={predicted}",
        "nullmodel_random": "C medio medido={measured} prediccion k/n={predicted}",

        "error_usage": "error de uso: {message}",
        "error_data": "error de datos: {message}",
        "error_internal": "fallo de invariante interno: {message}",
        "error_missing_input": "--{name} es obligatorio para este comando",
        "written": "informe escrito en {path}",
    },
}
