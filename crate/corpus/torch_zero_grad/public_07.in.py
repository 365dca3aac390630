def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def fit_until(model, optimizer, loss_of, tolerance):
    loss = loss_of(model)
    while loss > tolerance:
        model.zero_grad()
        loss = loss_of(model)
        loss.backward()
        optimizer.step()
    return loss
