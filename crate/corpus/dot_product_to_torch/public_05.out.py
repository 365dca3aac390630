import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def energy(signal, kernel, enabled):
    if enabled:
        e = torch.dot(signal, kernel)
        return e
    return None
