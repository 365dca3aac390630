def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def closure(model, x, y, loss_fn):
    for p in model.parameters():
        p.grad = None
    loss = loss_fn(model(x), y)
    loss.backward()
    return loss
