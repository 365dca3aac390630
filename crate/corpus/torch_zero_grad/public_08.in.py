def pick_larger(a, b):
    if a >= b:
        return a
    return b

def train_all(models, optimizers, x):
    for k in range(len(models)):
        models[k].zero_grad()
        models[k](x).sum().backward()
        optimizers[k].step()
    return models
