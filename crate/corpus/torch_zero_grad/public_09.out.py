def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def update(model, optimizer, loss, skip):
    if skip:
        return None
    else:
        for p in model.parameters():
            p.grad = None
        loss.backward()
        optimizer.step()
    return loss
