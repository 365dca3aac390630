import torch
def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def step(params, velocity, lr):
    updated = torch.add(params, velocity)
    return torch.tensor(updated) * lr
