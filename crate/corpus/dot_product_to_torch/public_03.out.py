import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def project(v, axis):
    length = torch.norm(axis)
    score = torch.dot(v, axis)
    return score / length
