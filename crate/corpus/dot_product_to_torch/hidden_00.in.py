def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def pair_scores(q, k1, k2):
    s1 = 0
    for i in range(len(q)):
        s1 += q[i] * k1[i]
    s2 = 0
    for i in range(len(q)):
        s2 += q[i] * k2[i]
    return s1, s2
