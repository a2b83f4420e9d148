"""
ParRuntime — детерминированный исполнитель data-parallel шагов с учётом раундов.

Модель — CRCW PRAM с явной политикой разрешения конкурентной записи:
- каждый шаг (ParStep) — один раунд; ширина шага — число логических процессоров
- процессоры шага читают снимок состояния до шага, записи видны только после барьера
- work = сумма ширин шагов (шаг без процессоров всё равно стоит 1 единицу)

Физическое исполнение — ThreadPoolExecutor (или inline при workers=1).
Результаты всегда собираются в порядке индексов, поэтому вывод и RoundReport
не зависят от числа workers.

Измеряемая величина — раунды, а не время.
"""

from __future__ import annotations

import math
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from core.errors import EmptyReduction, ListCycleError, WriteConflict


TERMINATOR = -1


class WritePolicy(str, Enum):
    """Политика разрешения конкурентной записи в одну ячейку."""

    DISJOINT = "disjoint"          # конфликт: ошибка
    MIN_COMBINE = "min-combine"    # ячейка получает минимум записанных значений
    MAX_COMBINE = "max-combine"    # ячейка получает максимум
    SUM_COMBINE = "sum-combine"    # fetch-and-add: к старому значению прибавляется сумма
    ARBITRARY = "arbitrary"        # побеждает процессор с наименьшим индексом


@dataclass(frozen=True)
class ParStep:
    """Один барьерный шаг."""

    name: str
    width: int
    write_policy: WritePolicy = WritePolicy.DISJOINT
    phase: str = "default"


@dataclass
class PhaseStats:
    rounds: int = 0
    work: int = 0


@dataclass
class RoundReport:
    """
    Отчёт о раундах и работе по фазам.

    Инвариант: rounds = число выполненных ParStep; work >= rounds.
    reference_processor_bound — справочное значение (n·log n + m)/log n для фазы st-нумерации.
    """

    phases: Dict[str, PhaseStats] = field(default_factory=dict)
    reference_processor_bound: Optional[float] = None

    @property
    def total_rounds(self) -> int:
        return sum(p.rounds for p in self.phases.values())

    @property
    def total_work(self) -> int:
        return sum(p.work for p in self.phases.values())

    def rounds(self, phase: str) -> int:
        stats = self.phases.get(phase)
        return stats.rounds if stats else 0

    def work(self, phase: str) -> int:
        stats = self.phases.get(phase)
        return stats.work if stats else 0

    def add(self, phase: str, rounds: int, work: int) -> None:
        stats = self.phases.setdefault(phase, PhaseStats())
        stats.rounds += rounds
        stats.work += work

    def as_dict(self) -> Dict[str, Any]:
        return {
            "phases": {k: {"rounds": v.rounds, "work": v.work} for k, v in self.phases.items()},
            "total_rounds": self.total_rounds,
            "total_work": self.total_work,
            "reference_processor_bound": self.reference_processor_bound,
        }

    def to_table(self) -> str:
        """Таблица `phase rounds work` для вывода CLI."""
        width = max([len("phase"), len("total")] + [len(k) for k in self.phases])
        lines = [f"{'phase':<{width}} {'rounds':>8} {'work':>12}"]
        for name, stats in self.phases.items():
            lines.append(f"{name:<{width}} {stats.rounds:>8} {stats.work:>12}")
        lines.append(f"{'total':<{width}} {self.total_rounds:>8} {self.total_work:>12}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["phase,rounds,work"]
        for name, stats in self.phases.items():
            lines.append(f"{name},{stats.rounds},{stats.work}")
        lines.append(f"total,{self.total_rounds},{self.total_work}")
        return "\n".join(lines)

    @staticmethod
    def processor_bound(n: int, m: int) -> float:
        """(n·log n + m)/log n — справочное число процессоров st-нумерации."""
        log_n = math.log2(max(n, 2))
        return (n * log_n + m) / log_n


StepListener = Callable[[ParStep], None]


def ceil_log2(k: int) -> int:
    """ceil(log2 k) для k >= 1; 0 для k <= 1."""
    if k <= 1:
        return 0
    return (k - 1).bit_length()


_REDUCE_OPS: Dict[str, Callable[[Any, Any], Any]] = {
    "min": min,
    "max": max,
    "sum": lambda a, b: a + b,
}


class ParRuntime:
    """
    Исполнитель ParStep-программ с учётом раундов и работы.

    Один экземпляр накапливает RoundReport; фазы задаются через `phase(name)`.
    """

    def __init__(self, workers: int = 1, parallel_threshold: int = 4096, trace: bool = False):
        """
        Args:
            workers: число физических потоков (>= 1)
            parallel_threshold: шаги уже этого значения исполняются inline
            trace: сохранять историю ParStep (для тестов)
        """
        if not isinstance(workers, int) or workers < 1:
            raise ValueError(f"workers must be positive integer, got: {workers!r}")
        self.workers = workers
        self.parallel_threshold = max(1, parallel_threshold)
        self._executor: Optional[ThreadPoolExecutor] = None
        self._executor_lock = threading.Lock()
        self._phase_stack: List[str] = ["default"]
        self._listeners: List[StepListener] = []
        self.report = RoundReport()
        self.trace: Optional[List[ParStep]] = [] if trace else None

    # --- жизненный цикл -------------------------------------------------

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "ParRuntime":
        return self

    def __exit__(self, *exc: Any) -> None:
        self.close()

    def reset(self) -> RoundReport:
        """Начать новый отчёт; возвращает предыдущий."""
        previous = self.report
        self.report = RoundReport()
        if self.trace is not None:
            self.trace = []
        return previous

    def add_listener(self, listener: StepListener) -> None:
        self._listeners.append(listener)

    def remove_listener(self, listener: StepListener) -> None:
        try:
            self._listeners.remove(listener)
        except ValueError:
            pass

    @property
    def current_phase(self) -> str:
        return self._phase_stack[-1]

    @contextmanager
    def phase(self, name: str) -> Iterator[str]:
        """Все шаги внутри блока учитываются в фазе `name`."""
        self._phase_stack.append(name)
        try:
            yield name
        finally:
            self._phase_stack.pop()

    # --- учёт ------------------------------------------------------------

    def _record(self, name: str, width: int, policy: WritePolicy = WritePolicy.DISJOINT) -> ParStep:
        step = ParStep(name=name, width=width, write_policy=policy, phase=self.current_phase)
        self.report.add(step.phase, 1, max(width, 1))
        if self.trace is not None:
            self.trace.append(step)
        for listener in self._listeners:
            try:
                listener(step)
            except Exception as e:
                # слушатели (метрики) не влияют на вычисление
                print(f"[ParRuntime] listener failed on step '{name}': {e}", file=sys.stderr)
        return step

    def _pool(self) -> ThreadPoolExecutor:
        with self._executor_lock:
            if self._executor is None:
                self._executor = ThreadPoolExecutor(max_workers=self.workers, thread_name_prefix="par")
            return self._executor

    def _execute(self, width: int, fn: Callable[[int], Any]) -> List[Any]:
        if self.workers == 1 or width < self.parallel_threshold:
            return [fn(i) for i in range(width)]
        chunk = -(-width // self.workers)
        bounds = [(lo, min(lo + chunk, width)) for lo in range(0, width, chunk)]

        def run(bound: Tuple[int, int]) -> List[Any]:
            lo, hi = bound
            return [fn(i) for i in range(lo, hi)]

        out: List[Any] = []
        for part in self._pool().map(run, bounds):
            out.extend(part)
        return out

    # --- примитивы -------------------------------------------------------

    def par_map(
        self,
        items: Union[int, range, Sequence[Any]],
        fn: Callable[[Any], Any],
        name: str = "par_map",
    ) -> List[Any]:
        """
        Применить fn к каждому элементу за 1 раунд.

        Args:
            items: ширина (fn получает индекс), range или последовательность (fn получает элемент)

        Returns:
            результаты в порядке индексов
        """
        if isinstance(items, int):
            width = items
            call = fn
        else:
            seq = items
            width = len(seq)
            call = lambda i: fn(seq[i])  # noqa: E731
        self._record(name, width)
        return self._execute(width, call)

    def par_write(
        self,
        width: int,
        fn: Callable[[int], Iterable[Tuple[Any, Any]]],
        target: Any,
        policy: WritePolicy = WritePolicy.DISJOINT,
        name: str = "par_write",
    ) -> Any:
        """
        Шаг с явными записями: fn(i) возвращает пары (ячейка, значение).

        Записи разрешаются политикой и применяются к target на барьере.
        target — list или dict; для SUM_COMBINE отсутствующая ячейка dict считается 0.

        Raises:
            WriteConflict: два процессора пишут в одну ячейку под DISJOINT
        """
        self._record(name, width, policy)
        per_proc = self._execute(width, lambda i: list(fn(i)))

        staged: Dict[Any, Any] = {}
        owner: Dict[Any, int] = {}
        for proc, writes in enumerate(per_proc):
            for cell, value in writes:
                if cell not in staged:
                    staged[cell] = value
                    owner[cell] = proc
                    continue
                if policy is WritePolicy.DISJOINT:
                    if owner[cell] != proc:
                        raise WriteConflict(
                            f"step '{name}': processors {owner[cell]} and {proc} write cell {cell!r}",
                            cell=repr(cell),
                        )
                    staged[cell] = value
                elif policy is WritePolicy.MIN_COMBINE:
                    if value < staged[cell]:
                        staged[cell] = value
                elif policy is WritePolicy.MAX_COMBINE:
                    if value > staged[cell]:
                        staged[cell] = value
                elif policy is WritePolicy.SUM_COMBINE:
                    staged[cell] = staged[cell] + value
                # ARBITRARY: процессоры перебираются по возрастанию, первый остаётся

        for cell, value in staged.items():
            if policy is WritePolicy.SUM_COMBINE:
                if isinstance(target, dict):
                    value = target.get(cell, 0) + value
                else:
                    value = target[cell] + value
            target[cell] = value
        return target

    def par_reduce(self, values: Sequence[Any], op: str = "sum", name: str = "par_reduce") -> Any:
        """
        Свёртка деревом: ceil(log2 k) раундов для k значений.

        Raises:
            EmptyReduction: пустой вход
            ValueError: неизвестная операция
        """
        combine = _REDUCE_OPS.get(op)
        if combine is None:
            raise ValueError(f"op must be one of {sorted(_REDUCE_OPS)}, got: {op!r}")
        if len(values) == 0:
            raise EmptyReduction(f"step '{name}': reduction over empty input")
        current = list(values)
        while len(current) > 1:
            prev = current
            half = (len(prev) + 1) // 2
            current = self.par_map(
                half,
                lambda i: combine(prev[2 * i], prev[2 * i + 1]) if 2 * i + 1 < len(prev) else prev[2 * i],
                name=name,
            )
        return current[0]

    def prefix_sum(self, values: Sequence[int], name: str = "prefix_sum") -> Tuple[List[int], int]:
        """
        Префиксные суммы (Hillis–Steele), ceil(log2 k) раундов.

        Returns:
            (исключающие префиксные суммы, общая сумма)
        """
        k = len(values)
        if k == 0:
            return [], 0
        acc = list(values)
        offset = 1
        while offset < k:
            prev = acc
            d = offset
            acc = self.par_map(k, lambda i: prev[i] + prev[i - d] if i >= d else prev[i], name=name)
            offset *= 2
        total = acc[-1]
        exclusive = [0] + acc[:-1]
        return exclusive, total

    def list_rank(self, succ: Sequence[int], name: str = "list_rank") -> List[int]:
        """
        Ранжирование списков указательным прыжком (Wyllie).

        succ[i] — следующий узел или TERMINATOR (-1). Ранг — расстояние до
        последнего узла своего списка. Ровно ceil(log2 k) раундов.

        Raises:
            ListCycleError: цикл без терминатора
        """
        k = len(succ)
        for i, nxt in enumerate(succ):
            if nxt != TERMINATOR and not 0 <= nxt < k:
                raise ListCycleError(f"successor of node {i} out of range: {nxt}", node=i)
        rank = [0 if nxt == TERMINATOR else 1 for nxt in succ]
        jump = list(succ)
        for _ in range(ceil_log2(k)):
            r_prev, j_prev = rank, jump
            pairs = self.par_map(
                k,
                lambda i: (r_prev[i] + r_prev[j_prev[i]], j_prev[j_prev[i]])
                if j_prev[i] != TERMINATOR
                else (r_prev[i], TERMINATOR),
                name=name,
            )
            rank = [p[0] for p in pairs]
            jump = [p[1] for p in pairs]
        for i, j in enumerate(jump):
            if j != TERMINATOR:
                raise ListCycleError(f"node {i} lies on a cycle without terminator", node=i)
        return rank

    def par_sort(self, keys: Sequence[Any], name: str = "par_sort") -> List[int]:
        """
        Устойчивая сортировка битонной сетью.

        Вход дополняется до степени двойки; раундов P(P+1)/2 при P = ceil(log2 k).

        Returns:
            перестановка: индексы входа в порядке возрастания ключей
        """
        k = len(keys)
        if k <= 1:
            return list(range(k))
        size = 1 << ceil_log2(k)
        # (0, key, index) < (1, pad_index): дополнение всегда в хвосте
        items: List[Tuple[Any, ...]] = [(0, keys[i], i) for i in range(k)]
        items.extend((1, i) for i in range(k, size))

        block = 2
        while block <= size:
            stride = block // 2
            while stride > 0:
                prev = items
                b, s = block, stride

                def exchange(i: int, prev=prev, b=b, s=s) -> Tuple[Any, ...]:
                    j = i ^ s
                    lo, hi = (prev[i], prev[j]) if prev[i] <= prev[j] else (prev[j], prev[i])
                    ascending = (i & b) == 0
                    first = i < j
                    if ascending:
                        return lo if first else hi
                    return hi if first else lo

                items = self.par_map(size, exchange, name=name)
                stride //= 2
            block *= 2
        return [item[2] for item in items if item[0] == 0]

    def splice(
        self,
        next_: List[int],
        prev_: List[int],
        insertions: Sequence[Tuple[int, Sequence[int]]],
        name: str = "splice",
    ) -> None:
        """
        Вставить цепочки новых узлов в двусвязные списки за 1 раунд.

        insertions: пары (after, chain) — chain встаёт сразу после узла after.
        Каждый узел цепочки — свой процессор с O(1) переназначениями ссылок.
        Две вставки после одного узла — WriteConflict (политика disjoint).
        """
        flat: List[Tuple[int, int]] = [
            (k, pos) for k, (_, chain) in enumerate(insertions) for pos in range(len(chain))
        ]
        old_next = [next_[after] for after, _ in insertions]

        def links(p: int) -> List[Tuple[Tuple[str, int], int]]:
            k, pos = flat[p]
            after, chain = insertions[k]
            node = chain[pos]
            writes: List[Tuple[Tuple[str, int], int]] = []
            if pos == 0:
                writes.append((("next", after), node))
                writes.append((("prev", node), after))
            else:
                writes.append((("prev", node), chain[pos - 1]))
            if pos == len(chain) - 1:
                tail = old_next[k]
                writes.append((("next", node), tail))
                if tail != TERMINATOR:
                    writes.append((("prev", tail), node))
            else:
                writes.append((("next", node), chain[pos + 1]))
            return writes

        staged: Dict[Tuple[str, int], int] = {}
        self.par_write(len(flat), links, staged, WritePolicy.DISJOINT, name=name)
        for (arr, idx), value in staged.items():
            if arr == "next":
                next_[idx] = value
            else:
                prev_[idx] = value
