def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def make_trainer(model, optimizer):
    def step(x):
        model.zero_grad()
        out = model(x).sum()
        out.backward()
        optimizer.step()
        return out
    return step
