import torch

def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def clipped_step(model, optimizer, loss):
    model.zero_grad()
    loss.backward()
    torch.nn.utils.clip_grad_norm_(model.parameters(), 1.0)
    optimizer.step()
    return loss.item()
