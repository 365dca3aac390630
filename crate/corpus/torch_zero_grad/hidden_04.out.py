import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def clipped_step(model, optimizer, loss):
    for p in model.parameters():
        p.grad = None
    loss.backward()
    torch.nn.utils.clip_grad_norm_(model.parameters(), 1.0)
    optimizer.step()
    return loss.item()
