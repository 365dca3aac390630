def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def update(model, optimizer, loss, skip):
    if skip:
        return None
    else:
        model.zero_grad()
        loss.backward()
        optimizer.step()
    return loss
