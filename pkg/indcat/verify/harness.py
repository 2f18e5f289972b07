"""
核对工具模块

把引理与命题的结论逐项与精确计算结果比较，输出 ConformanceRecord:

- cross_validate_instance: 四种独立多项式算法与 (1+x) 重数的交叉核对
- check_shift_lemma: 乘以 (1+x)^t 后的峰位位移与占优类翻转
- check_diff_bounds: 乘积相邻系数差的下界
- check_symmetric_multiplier: 以对称单峰多项式代替 (1+x)^t
- verify_theorem_instance: 单个毛毛虫实例的完整证明链
- check_base_case: q_1 = (1+x)^{m_1} + x 的基本情形
"""

import logging
from typing import Dict, List, Optional, Tuple

from indcat.core.caterpoly import (
    caterpillar_polys,
    check_conditions,
    closed_k,
    k_exponent_min_recurrence,
    p_recursion,
    predict_theorem,
)
from indcat.core.errors import IntegrityError, ShapeDomainError
from indcat.core.polyalg import (
    Polynomial,
    binomial,
    mul,
    mul_binomial_power,
    remove_binomial_factor,
)
from indcat.core.shape import (
    STRICT_LD,
    STRICT_RD,
    WEAK_LD,
    WEAK_RD,
    ShapeReport,
    analyze_shape,
)
from indcat.core.treegraph import (
    DEFAULT_BRUTEFORCE_CAP,
    CaterpillarSpec,
    build_caterpillar,
    indpoly_bruteforce,
    indpoly_deletion,
    indpoly_treedp,
)
from indcat.verify.records import (
    CONFORM,
    HYPOTHESIS_NOT_MET,
    ConformanceRecord,
    verdict_from_findings,
)

logger = logging.getLogger(__name__)


def _log_record(record: ConformanceRecord) -> ConformanceRecord:
    if record.verdict == HYPOTHESIS_NOT_MET:
        logger.debug(f"{record.check_name}: 前提不成立 {record.inputs}")
    elif record.verdict != CONFORM:
        logger.warning(f"{record.check_name}: 不一致 {record.findings}")
    return record


def cross_validate_instance(spec: CaterpillarSpec, cap: Optional[int] = None,
                            use_bruteforce: bool = True) -> ConformanceRecord:
    """
    用毛毛虫递推、树形 DP、删除递归和 (上限以内的) 暴力枚举分别计算 I(T(m, n))

    四个结果必须逐系数相等；因式分解得到的 (1+x) 重数还要等于 min 递推值，
    m 非递减时也要等于闭式 k_n。不一致记为 nonconform，不抛异常。

    参数:
        spec: 毛毛虫参数
        cap: 暴力枚举的顶点数上限，默认 22
        use_bruteforce: 是否启用暴力枚举

    返回:
        ConformanceRecord: 核对记录
    """
    cap = DEFAULT_BRUTEFORCE_CAP if cap is None else cap
    tree = build_caterpillar(spec)
    values: Dict[str, Polynomial] = {
        "recursion": p_recursion(spec.m)[-1],
        "treedp": indpoly_treedp(tree),
        "deletion": indpoly_deletion(tree),
    }
    skipped = []
    if use_bruteforce and tree.vertex_count <= cap:
        values["brute"] = indpoly_bruteforce(tree, cap)
    else:
        skipped.append("brute")
        logger.info(f"m=({spec}) 共 {tree.vertex_count} 个顶点，跳过暴力枚举 (上限 {cap})")

    findings: List[str] = []
    reference = values["treedp"]
    for method, value in values.items():
        if value != reference:
            findings.append(f"{method} 与 treedp 结果不一致: {value} != {reference}")

    multiplicity, _ = remove_binomial_factor(reference)
    k_min = k_exponent_min_recurrence(spec.m)[-1]
    if k_min != multiplicity:
        findings.append(f"min 递推给出 k_n={k_min}，实际 (1+x) 重数为 {multiplicity}")
    k_closed = None
    if spec.is_non_decreasing:
        k_closed = closed_k(spec.m, spec.n)
        if k_closed != multiplicity:
            findings.append(f"闭式 k_n={k_closed}，实际 (1+x) 重数为 {multiplicity}")
        try:
            caterpillar_polys(spec)
        except IntegrityError as e:
            findings.append(str(e))

    record = ConformanceRecord(
        check_name="cross_validate_instance",
        inputs={"spec": spec.to_dict(), "cap": cap},
        predicted={"all_methods_agree": True,
                   "multiplicity": k_closed if k_closed is not None else k_min},
        observed={
            "indpoly": reference.to_strings(),
            "methods": sorted(values),
            "skipped": skipped,
            "multiplicity": multiplicity,
            "k_min_recurrence": k_min,
            "k_closed": k_closed,
        },
        verdict=verdict_from_findings(findings),
        findings=findings,
    )
    return _log_record(record)


def _safe_shape(p: Polynomial) -> Optional[ShapeReport]:
    try:
        return analyze_shape(p)
    except ShapeDomainError:
        return None


def _lemma_hypotheses(shape: Optional[ShapeReport], t: int) -> List[str]:
    """平移引理的前提；返回不成立的条目"""
    if shape is None:
        return ["q 不是计数序列"]
    unmet = []
    if not shape.strictly_unimodal:
        unmet.append("q 不是严格单峰")
    if not shape.is_dominant:
        unmet.append("q 既不弱 LD 也不弱 RD")
    if shape.balanced is not True:
        unmet.append("q 不平衡")
    if t < 1:
        unmet.append(f"t={t} 必须为正整数")
    if shape.mode is not None and t > shape.mode:
        unmet.append(f"t={t} 超过 q 的峰位 {shape.mode}")
    return unmet


def _predict_shift(shape: ShapeReport, t: int) -> Tuple[List[str], List[int]]:
    """
    平移引理对 (1+x)^t q 的预测: 对 q 满足的每一侧分别给出目标占优类与峰位

    返回:
        (预测占优类列表, 预测峰位列表)，峰位列表去重后多于一个说明各侧预测冲突
    """
    mu = shape.mode
    classes: List[str] = []
    modes: List[int] = []
    for left in (True, False):
        weak, strict = (WEAK_LD, STRICT_LD) if left else (WEAK_RD, STRICT_RD)
        if weak not in shape.dominance:
            continue
        target_left = left if t % 2 == 0 else not left
        target_weak, target_strict = (WEAK_LD, STRICT_LD) if target_left else (WEAK_RD, STRICT_RD)
        classes.append(target_weak)
        if strict in shape.dominance:
            classes.append(target_strict)
        if t % 2 == 0:
            modes.append(mu + t // 2)
        else:
            modes.append(mu + (t - 1) // 2 if left else mu + (t + 1) // 2)
    return sorted(set(classes)), sorted(set(modes))


def check_shift_lemma(q: Polynomial, t: int, seed: Optional[int] = None) -> ConformanceRecord:
    """
    核对平移引理: q 平衡、严格单峰且弱 LD 或弱 RD，1 <= t <= mu 时，
    (1+x)^t q 平衡、严格单峰，t 偶数时保持占优侧、t 奇数时翻转，峰位相应右移

    参数:
        q: 多项式
        t: 幂次
        seed: 输入由生成器产生时的种子

    返回:
        ConformanceRecord: 前提不成立时判定为 hypothesis-not-met
    """
    inputs = {"q": q.to_strings(), "t": t}
    shape = _safe_shape(q)
    unmet = _lemma_hypotheses(shape, t)
    if unmet:
        return _log_record(ConformanceRecord(
            check_name="check_shift_lemma", inputs=inputs, verdict=HYPOTHESIS_NOT_MET,
            seed=seed, findings=unmet,
            observed={"q_shape": shape.to_dict() if shape else None}))

    product = mul_binomial_power(q, t)
    observed = analyze_shape(product)
    classes, modes = _predict_shift(shape, t)

    findings: List[str] = []
    if len(modes) > 1:
        findings.append(f"q 同时满足 LD 与 RD，两侧预测的峰位冲突: {modes}")
    if not observed.strictly_unimodal:
        findings.append(f"乘积不是严格单峰，峰位 {list(observed.modes)}")
    if list(observed.modes) != modes[:1]:
        findings.append(f"乘积峰位 {list(observed.modes)} 与预测 {modes} 不符")
    if observed.balanced is not True:
        findings.append("乘积不平衡")
    missing = [c for c in classes if c not in observed.dominance]
    if missing:
        findings.append(f"乘积缺少占优类 {missing}")

    record = ConformanceRecord(
        check_name="check_shift_lemma",
        inputs=inputs,
        predicted={"strictly_unimodal": True, "balanced": True,
                   "dominance": classes, "modes": modes},
        observed={"product": product.to_strings(), **observed.to_dict()},
        verdict=verdict_from_findings(findings),
        seed=seed,
        findings=findings,
    )
    return _log_record(record)


def _inequality(name: str, k: int, j: Optional[int], lhs: int, rhs: int) -> Dict:
    return {"part": name, "k": k, "j": j, "lhs": lhs, "rhs": rhs, "holds": lhs >= rhs}


def check_diff_bounds(q: Polynomial, t: int, seed: Optional[int] = None) -> ConformanceRecord:
    """
    核对乘积 (1+x)^t q = sum beta_i x^i 相邻系数差的下界

    第 (1) 部分: k in [mu+1, nu-1]，j in [k-ceil(t/2)+1, k]，
        beta_{k+1}-beta_k >= (C(t,k-j+1)-C(t,k-j))(b_j-b_{j+1}) 且 >= b_{k+1}-b_{k+2}
    第 (2) 部分: k in [nu, deg q-1]，j in [k-floor(t/2), k-1]，
        beta_k-beta_{k+1} >= (C(t,k-j)-C(t,k-j-1))(b_j-b_{j+1}) 且 >= b_k-b_{k+1}

    nu 取乘积的实测峰位；不在 {mu+floor(t/2), mu+ceil(t/2)} 内时记录为不一致。
    """
    inputs = {"q": q.to_strings(), "t": t}
    shape = _safe_shape(q)
    unmet = _lemma_hypotheses(shape, t)
    if unmet:
        return _log_record(ConformanceRecord(
            check_name="check_diff_bounds", inputs=inputs, verdict=HYPOTHESIS_NOT_MET,
            seed=seed, findings=unmet))

    b = q
    beta = mul_binomial_power(q, t)
    mu = shape.mode
    product_modes = analyze_shape(beta).modes
    nu = product_modes[0]
    expected_nu = sorted({mu + t // 2, mu + (t + 1) // 2})
    half_up, half_down = (t + 1) // 2, t // 2

    checks: List[Dict] = []
    for k in range(mu + 1, nu):
        lhs = beta[k + 1] - beta[k]
        for j in range(k - half_up + 1, k + 1):
            coef = binomial(t, k - j + 1) - binomial(t, k - j)
            checks.append(_inequality("1", k, j, lhs, coef * (b[j] - b[j + 1])))
        checks.append(_inequality("1", k, None, lhs, b[k + 1] - b[k + 2]))
    for k in range(nu, q.degree):
        lhs = beta[k] - beta[k + 1]
        for j in range(k - half_down, k):
            coef = binomial(t, k - j) - binomial(t, k - j - 1)
            checks.append(_inequality("2", k, j, lhs, coef * (b[j] - b[j + 1])))
        checks.append(_inequality("2", k, None, lhs, b[k] - b[k + 1]))

    findings: List[str] = []
    if len(product_modes) > 1 or nu not in expected_nu:
        findings.append(f"乘积峰位 {list(product_modes)} 不在 {expected_nu} 内")
    for c in checks:
        if not c["holds"]:
            target = "孤立项" if c["j"] is None else f"j={c['j']}"
            findings.append(f"第 ({c['part']}) 部分 k={c['k']} {target}: {c['lhs']} < {c['rhs']}")

    record = ConformanceRecord(
        check_name="check_diff_bounds",
        inputs=inputs,
        predicted={"nu": expected_nu, "all_inequalities_hold": True},
        observed={"nu": nu, "nu_in_predicted": nu in expected_nu,
                  "product": beta.to_strings(), "inequalities": checks},
        verdict=verdict_from_findings(findings),
        seed=seed,
        findings=findings,
    )
    return _log_record(record)


def _shape_claims(observed: ShapeReport, reference: ShapeReport) -> List[str]:
    """比较两个形态报告中与常数倍无关的部分"""
    findings = []
    for key in ("modes", "unimodal", "strictly_unimodal", "dominance", "balanced", "symmetric"):
        if getattr(observed, key) != getattr(reference, key):
            findings.append(f"{key}: 乘积为 {getattr(observed, key)}，q 为 {getattr(reference, key)}")
    return findings


def check_symmetric_multiplier(q: Polynomial, p_sym: Polynomial) -> ConformanceRecord:
    """
    以对称单峰的偶次多项式 p_sym 代替 (1+x)^t 核对乘积形态

    适用的断言逐一核对:
        constant: p_sym 为正常数时乘积形态与 q 相同
        lemma: q 满足平移引理前提且 deg p_sym <= mu 时，乘积平衡、严格单峰、
               保持占优侧、峰位为 mu + deg(p_sym)/2
        symmetric: q 对称单峰时乘积对称单峰
    没有任何断言适用时判定为 hypothesis-not-met。
    """
    inputs = {"q": q.to_strings(), "p_sym": p_sym.to_strings()}
    sym_shape = _safe_shape(p_sym)
    q_shape = _safe_shape(q)
    unmet = []
    if sym_shape is None or not (sym_shape.symmetric and sym_shape.unimodal):
        unmet.append("p_sym 不是对称单峰的计数序列")
    elif p_sym.degree % 2 == 1:
        unmet.append(f"p_sym 的次数 {p_sym.degree} 为奇数")
    if q_shape is None:
        unmet.append("q 不是计数序列")
    if unmet:
        return _log_record(ConformanceRecord(
            check_name="check_symmetric_multiplier", inputs=inputs,
            verdict=HYPOTHESIS_NOT_MET, findings=unmet))

    product = mul(q, p_sym)
    observed = analyze_shape(product)
    t = p_sym.degree
    claims: List[str] = []
    predicted: Dict = {}
    findings: List[str] = []

    if t == 0:
        claims.append("constant")
        predicted["constant"] = q_shape.to_dict()
        findings.extend(_shape_claims(observed, q_shape))
    if t > 0 and not _lemma_hypotheses(q_shape, t):
        claims.append("lemma")
        classes, modes = _predict_shift(q_shape, t)
        weak_classes = [c for c in classes if c in (WEAK_LD, WEAK_RD)]
        predicted["lemma"] = {"strictly_unimodal": True, "balanced": True,
                              "dominance": weak_classes, "modes": modes}
        if len(modes) > 1 or not observed.strictly_unimodal or list(observed.modes) != modes[:1]:
            findings.append(f"乘积峰位 {list(observed.modes)} 与预测 {modes} 不符")
        if observed.balanced is not True:
            findings.append("乘积不平衡")
        missing = [c for c in weak_classes if c not in observed.dominance]
        if missing:
            findings.append(f"乘积缺少占优类 {missing}")
    if t > 0 and q_shape.symmetric and q_shape.unimodal:
        claims.append("symmetric")
        predicted["symmetric"] = {"symmetric": True, "unimodal": True}
        if not (observed.symmetric and observed.unimodal):
            findings.append("对称单峰多项式之积不再对称单峰")

    if not claims:
        return _log_record(ConformanceRecord(
            check_name="check_symmetric_multiplier", inputs=inputs,
            verdict=HYPOTHESIS_NOT_MET,
            findings=["q 既不满足平移引理前提也不对称单峰"],
            observed={"product": product.to_strings(), **observed.to_dict()}))

    record = ConformanceRecord(
        check_name="check_symmetric_multiplier",
        inputs=inputs,
        predicted={"claims": claims, **predicted},
        observed={"product": product.to_strings(), **observed.to_dict()},
        verdict=verdict_from_findings(findings),
        findings=findings,
    )
    return _log_record(record)


def _is_degenerate_q2(m: Tuple[int, ...]) -> bool:
    """m_1 为偶数、m_1 >= 6 且 m_2 = m_1 + 1 时 q_2 有两个相邻峰位"""
    return len(m) >= 2 and m[0] % 2 == 0 and m[0] >= 6 and m[1] == m[0] + 1


def verify_theorem_instance(spec: CaterpillarSpec,
                            cond3_range: Optional[Tuple[int, int]] = None) -> ConformanceRecord:
    """
    单个毛毛虫实例的完整证明链

    条件 (1)-(3) 不成立时判定为 hypothesis-not-met，形态结果仍然附在记录里。
    否则逐项核对: 每个 q_j 严格单峰、平衡且 LD 或 RD (q_2 的退化情形要求两个
    相邻峰位)；p_n 单峰且峰位在 {floor(d/2), ceil(d/2)} 内；每步 t <= mu(q_{n-1})；
    每步 (t-1)(t'-1) >= 1。

    参数:
        spec: 毛毛虫参数
        cond3_range: 条件 (3) 的检查区间

    返回:
        ConformanceRecord: 核对记录
    """
    conditions = check_conditions(spec, cond3_range)
    inputs = {"spec": spec.to_dict(),
              "cond3_range": list(conditions.cond3_range)}
    findings: List[str] = []

    try:
        sequence = caterpillar_polys(spec)
    except IntegrityError as e:
        return _log_record(ConformanceRecord(
            check_name="verify_theorem_instance", inputs=inputs,
            verdict=verdict_from_findings([str(e)]), findings=[str(e)]))

    if sequence.closed_form:
        q_list = list(sequence.q)
        k_list = list(sequence.k)
    else:
        factored = sequence.factored()
        q_list = [qj for _, qj in factored]
        k_list = [kj for kj, _ in factored]
    q_shapes = [analyze_shape(qj) for qj in q_list]
    p_n = sequence.p[-1]
    p_shape = analyze_shape(p_n)
    d = p_n.degree
    mode_set = sorted({d // 2, (d + 1) // 2})

    observed = {
        "k": k_list,
        "q_shapes": [s.to_dict() for s in q_shapes],
        "p_shape": p_shape.to_dict(),
        "p_mode": list(p_shape.modes),
        "conditions": conditions.to_dict(),
    }
    predicted: Dict = {"p_unimodal": True, "p_mode_set": mode_set,
                       "q_claim": "strictly unimodal, balanced, LD or RD"}
    steps = ()
    if sequence.closed_form:
        steps = predict_theorem(spec, sequence).steps
        observed["steps"] = [s.to_dict() for s in steps]

    if not conditions.all_pass:
        return _log_record(ConformanceRecord(
            check_name="verify_theorem_instance", inputs=inputs, predicted=predicted,
            observed=observed, verdict=HYPOTHESIS_NOT_MET,
            findings=["定理条件不成立"]))

    for j, shape in enumerate(q_shapes, start=1):
        if j == 2 and _is_degenerate_q2(spec.m):
            m2 = spec.m[1]
            expected = ((m2 - 1) // 2, (m2 + 1) // 2)
            predicted["q2_degenerate_modes"] = list(expected)
            if not shape.unimodal or shape.modes != expected:
                findings.append(f"q_2 应有相邻峰位 {list(expected)}，实际 {list(shape.modes)}")
            continue
        if not shape.strictly_unimodal:
            findings.append(f"q_{j} 不是严格单峰，峰位 {list(shape.modes)}")
        elif not shape.is_dominant:
            findings.append(f"q_{j} 既不 LD 也不 RD")
        elif shape.balanced is not True:
            findings.append(f"q_{j} 不平衡")

    if not p_shape.unimodal:
        findings.append(f"p_{spec.n} 不是单峰")
    if not set(p_shape.modes) <= set(mode_set):
        findings.append(f"p_{spec.n} 的峰位 {list(p_shape.modes)} 不在 {mode_set} 内")

    for step in steps:
        if step.t_hypothesis_ok is False:
            findings.append(f"第 {step.step} 步 t={step.t} 超过 mu(q_{step.step - 1})={step.mu}")
        if step.bound < 1:
            findings.append(f"第 {step.step} 步 (t-1)(t'-1)={step.bound} < 1")

    record = ConformanceRecord(
        check_name="verify_theorem_instance",
        inputs=inputs,
        predicted=predicted,
        observed=observed,
        verdict=verdict_from_findings(findings),
        findings=findings,
    )
    return _log_record(record)


def check_base_case(m1: int) -> ConformanceRecord:
    """
    核对 q_1 = (1+x)^{m_1} + x 是否严格单峰、平衡且弱 LD

    奇数 m_1 >= 5 时 q_1 有两个相同的最大系数，m_1 = 3 时 q_1 = [1,4,3,1] 满足 RD 而不满足 LD，
    这些差异都作为 findings 记录。
    """
    if m1 < 1:
        raise ValueError(f"m_1 必须为正整数: {m1}")
    q1 = mul_binomial_power(Polynomial.ONE, m1) + Polynomial.X
    shape = analyze_shape(q1)
    findings: List[str] = []
    if not shape.strictly_unimodal:
        findings.append(f"q_1 不是严格单峰: 峰位 {list(shape.modes)} (与 q_1 总是严格单峰的断言不符)")
    else:
        if WEAK_LD not in shape.dominance:
            findings.append(f"q_1 不是弱 LD，实际占优类 {sorted(shape.dominance)}")
        if shape.balanced is not True:
            findings.append("q_1 不平衡")
    record = ConformanceRecord(
        check_name="check_base_case",
        inputs={"m1": m1},
        predicted={"strictly_unimodal": True, "balanced": True, "dominance": [WEAK_LD]},
        observed={"q1": q1.to_strings(), **shape.to_dict()},
        verdict=verdict_from_findings(findings),
        findings=findings,
    )
    return _log_record(record)
