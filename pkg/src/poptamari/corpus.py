"""Fixed collection of base paths used by the verification suites."""

from .nu_tamari import m_tamari_path

IRREGULAR = (
    "ENNEEEENNE",
    "NEENENEENE",
    "NEEEENEN",
    "ENNENN",
    "EENNE",
    "NNE",
    "ENENEENE",
    "EENENNEE",
    "NEENNEEENE",
    "EENNNEENE",
    "ENEEENNENE",
    "NNEEENEENE",
    "EEENNENEN",
    "ENENENENEN",
    "NEEENNEEEN",
    "EENEENEENEE",
    "ENNNEEENNE",
    "NENNEEENEE",
    "EENNEENNEE",
    "NEEENEEENE",
    "ENEENEEENEEE",
    "EEENNNEEENNN",
    "EENEENENENN",
    "",
    "EEE",
    "NNN",
    "NNNEE",
    "EEN",
    "EN",
    "NE",
)


def m_tamari_corpus() -> list[str]:
    out = [m_tamari_path(1, n) for n in range(1, 7)]
    out += [m_tamari_path(2, n) for n in range(1, 5)]
    out += [m_tamari_path(3, n) for n in range(1, 4)]
    return out


def corpus(max_length: int = 12) -> list[str]:
    """Deduplicated base paths of length at most ``max_length``, in a fixed order."""
    seen, out = set(), []
    for nu in list(IRREGULAR) + m_tamari_corpus():
        if len(nu) <= max_length and nu not in seen:
            seen.add(nu)
            out.append(nu)
    return out
