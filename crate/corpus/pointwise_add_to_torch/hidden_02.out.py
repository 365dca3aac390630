import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def encode(tokens, positions):
    emb = torch.randn(len(tokens))
    mixed = torch.add(emb, positions)
    return mixed
