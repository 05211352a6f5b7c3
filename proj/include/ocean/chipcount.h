#ifndef OCEAN_CHIPCOUNT_H
#define OCEAN_CHIPCOUNT_H

#include "ocean/core_model.h"

#include <map>

namespace ocean
{

enum class ChipScheme
{
    Optimistic,
    Pessimistic,
};

struct ChipParams
{
    ChipScheme scheme = ChipScheme::Optimistic;
    /// Chip accumulation rate, chips per second added to every balance.
    double car = 0.0;
    double spendThreshold = 0.0;
    double initialBalance = 0.0;
    double ceiling = 100.0;
    /// Optimistic credit also on the last hop, when the accepting neighbor is the destination.
    bool creditDestination = true;

    void Validate() const;
};

enum class Admission
{
    Allow,
    Deny,
};

/**
 * Chip balances a node keeps for its neighbors. A neighbor earns a chip when it
 * relays (optimistic: accepts) one of this node's packets and spends one when
 * this node relays a packet for it. Every balance also grows at the chip
 * accumulation rate, capped at the ceiling; accrual is applied lazily when a
 * balance is touched.
 */
class ChipLedger
{
  public:
    explicit ChipLedger(ChipParams params);

    Admission AdmitForward(NodeId requester, SimTime now);

    /// Optimistic scheme only; throws std::logic_error otherwise.
    void CreditOnAccept(NodeId neighbor, SimTime now);

    /// Pessimistic scheme only; throws std::logic_error otherwise.
    void CreditOnObservedForward(NodeId neighbor, SimTime now);

    double Balance(NodeId neighbor, SimTime now) const;

    const ChipParams& Params() const { return m_params; }

  private:
    struct Account
    {
        double balance = 0.0;
        SimTime updated{};
    };

    double Accrued(const Account& a, SimTime now) const;
    Account& Touch(NodeId neighbor, SimTime now);
    void Credit(NodeId neighbor, SimTime now);

    ChipParams m_params;
    std::map<NodeId, Account> m_accounts;
};

} // namespace ocean

#endif // OCEAN_CHIPCOUNT_H
