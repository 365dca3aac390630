def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def reinforce(policy, optimizer, log_probs, returns):
    for p in policy.parameters():
        p.grad = None
    loss = 0
    for lp, r in zip(log_probs, returns):
        loss = loss - lp * r
    loss.backward()
    optimizer.step()
    return loss
