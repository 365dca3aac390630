def pick_larger(a, b):
    if a >= b:
        return a
    return b

def accumulate(model, batches, loss_fn, every):
    step = 0
    for x, y in batches:
        loss_fn(model(x), y).backward()
        step += 1
        if step % every == 0:
            model.zero_grad()
    return step
