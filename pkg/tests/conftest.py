import hypothesis.strategies as st

from chromaloc.core import INF
from chromaloc.lattice import ZERO, GlobalFiniteLoc, PLocalFiniteLoc
from chromaloc.profile import Kn, MapProfile

POOL = (2, 3, 5, 7, 11)
# A prime that no generated value mentions; it sees only the default height.
FRESH = 13

heights = st.sampled_from([0, 1, 2, 3, 5, INF])

params_locs = st.builds(
    GlobalFiniteLoc,
    heights,
    st.dictionaries(st.sampled_from(POOL), heights, max_size=len(POOL)),
)
global_locs = st.one_of(st.just(ZERO), params_locs)
plocal_locs = st.one_of(st.just(PLocalFiniteLoc(-1)), st.builds(PLocalFiniteLoc, heights))

kn_entries = st.sampled_from([Kn.ZERO, Kn.ISO])
profiles = st.builds(MapProfile, st.lists(kn_entries, max_size=8).map(tuple), kn_entries)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", []))
            if "criterion" in props and report.when == "call":
                lines.append((props["criterion"], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
