import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def pair_scores(q, k1, k2):
    s1 = torch.dot(q, k1)
    s2 = torch.dot(q, k2)
    return s1, s2
