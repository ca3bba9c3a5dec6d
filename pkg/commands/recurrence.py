"""The period-five recurrence on the pentagon"""

from cluster.clustervars import compute_table, period_five_orbit, specialized_orbit, verify_period_five

from .base import BaseCommand, RunConfig, log


class RecurrenceCommand(BaseCommand):
    NAME = "recurrence"
    HELP = "check f(k+1) = (f(k) + 1) / f(k-1) has period five"
    TAKES_N = False

    def run(self, config: RunConfig) -> int:
        table = compute_table(2)
        orbit = period_five_orbit(table)
        ok = verify_period_five(2, table)
        values = specialized_orbit(1, 1, table)

        lines = [self.header(config)]
        lines += [f"f{k} = {f}" for k, f in enumerate(orbit, start=1)]
        lines.append("at x1 = x2 = 1: " + ", ".join(str(v) for v in values))
        lines.append("period 5 confirmed" if ok else "period 5 NOT confirmed")
        self.emit(config, "\n".join(lines))
        log.info("✅ period 5 confirmed" if ok else "❌ period 5 not confirmed")
        return 0 if ok else 1
